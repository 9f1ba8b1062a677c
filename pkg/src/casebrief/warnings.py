"""Threshold warnings for user label assignments.

The safeguard: given the model's probability for the label a user chose,
warn when that probability falls strictly below a static threshold tau,
otherwise abstain. Boundary equality abstains, which keeps false
positives at a minimum; the default interactive threshold is the most
conservative of the shipped sweep set.

Aggregation follows the warn/abstain bookkeeping: every (sentence,
candidate label) pair either deserved a warning (candidate differs from
gold) or deserved silence (candidate is gold), giving a 2x2 table per
threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from casebrief.classifier.types import SentenceClassifier
from casebrief.corpus.types import Sentence
from casebrief.labels import LABEL_ORDER, SectionLabel

#: Thresholds swept in reports.
SWEEP_TAUS: tuple[float, ...] = (0.05, 0.10, 0.20)

#: Default interactive threshold: the lowest-false-positive setting.
DEFAULT_TAU = 0.05


class InvalidThreshold(ValueError):
    """tau must lie strictly between 0 and 1."""


class EmptyTestSet(ValueError):
    """Sweeping requires at least one gold-labeled sentence."""


def validate_tau(tau: float) -> float:
    if not 0.0 < tau < 1.0:
        raise InvalidThreshold(f"tau must be in (0, 1), got {tau!r}")
    return float(tau)


class Decision(str, Enum):
    WARN = "Warn"
    ABSTAIN = "Abstain"


@dataclass(frozen=True)
class WarningDecision:
    """Outcome of one check, with the probability for display."""

    decision: Decision
    assigned_label: SectionLabel
    prob_assigned: float
    tau: float

    @property
    def is_warning(self) -> bool:
        return self.decision is Decision.WARN


@dataclass(frozen=True)
class WarningTable:
    """2x2 tally of decisions against what each pair deserved."""

    warn_when_should_warn: int
    warn_when_should_abstain: int
    abstain_when_should_warn: int
    abstain_when_should_abstain: int
    tau: float

    @property
    def total_warnings(self) -> int:
        return self.warn_when_should_warn + self.warn_when_should_abstain

    @property
    def total_abstentions(self) -> int:
        return self.abstain_when_should_warn + self.abstain_when_should_abstain

    @property
    def total_pairs(self) -> int:
        return self.total_warnings + self.total_abstentions

    @property
    def fp_rate(self) -> float | None:
        """Fraction of issued warnings that were wrong; None if no warnings."""
        if self.total_warnings == 0:
            return None
        return self.warn_when_should_abstain / self.total_warnings

    @property
    def fn_rate(self) -> float | None:
        """Fraction of abstentions that missed a deserved warning; None if none."""
        if self.total_abstentions == 0:
            return None
        return self.abstain_when_should_warn / self.total_abstentions


def decide(prob_assigned: float, user_label: SectionLabel, tau: float) -> WarningDecision:
    """The bare rule: warn iff the assigned label's probability < tau."""
    tau = validate_tau(tau)
    decision = Decision.WARN if prob_assigned < tau else Decision.ABSTAIN
    return WarningDecision(
        decision=decision, assigned_label=user_label, prob_assigned=prob_assigned, tau=tau
    )


def check_assignment(
    model: SentenceClassifier, text: str, user_label: SectionLabel, tau: float
) -> WarningDecision:
    """Score one (text, user label) pair against the threshold."""
    probs = model.predict_proba(text)
    return decide(probs[user_label], user_label, tau)


def sweep_pairs(
    model: SentenceClassifier, test: Sequence[Sentence], tau: float
) -> WarningTable:
    """Tally decisions over every (sentence, candidate label) pair.

    A pair deserves abstention exactly when the candidate is the gold
    label, so each sentence contributes one should-abstain pair and
    five should-warn pairs.
    """
    tau = validate_tau(tau)
    if not test:
        raise EmptyTestSet("sweep requires a non-empty test set")

    warn_should_warn = warn_should_abstain = 0
    abstain_should_warn = abstain_should_abstain = 0
    for sentence in test:
        probs = model.predict_proba(sentence.text)
        for candidate in LABEL_ORDER:
            warned = probs[candidate] < tau
            should_abstain = candidate == sentence.label
            if warned and should_abstain:
                warn_should_abstain += 1
            elif warned:
                warn_should_warn += 1
            elif should_abstain:
                abstain_should_abstain += 1
            else:
                abstain_should_warn += 1
    return WarningTable(
        warn_when_should_warn=warn_should_warn,
        warn_when_should_abstain=warn_should_abstain,
        abstain_when_should_warn=abstain_should_warn,
        abstain_when_should_abstain=abstain_should_abstain,
        tau=tau,
    )


def rates(table: WarningTable) -> tuple[float | None, float | None]:
    """(fp_rate, fn_rate); a rate is None when its denominator is zero."""
    return table.fp_rate, table.fn_rate
