"""Evaluation run records: one bundle per completed evaluation.

A record ties together the model and corpus fingerprints, the split
and thresholds evaluated, and both reports. ``created_at`` is stamped
only when a record enters the project store; the report payloads stay
timestamp-free so identical runs serialize identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from casebrief.classifier.types import SentenceClassifier
from casebrief.corpus.io import ProcessedCorpus
from casebrief.corpus.splits import label_distribution
from casebrief.evaluation.report import (
    ClassificationReport,
    WarningReport,
    classification_report,
    warning_report,
)
from casebrief.warnings import SWEEP_TAUS, EmptyTestSet


@dataclass(frozen=True)
class EvalRunRecord:
    run_id: str
    model_fingerprint: str
    corpus_fingerprint: str
    split: str
    taus: tuple[float, ...]
    classification: ClassificationReport
    warnings: WarningReport
    label_counts: dict[str, int]
    created_at: str | None = None

    def to_dict(self) -> dict:
        return {
            "run_id": self.run_id,
            "model_fingerprint": self.model_fingerprint,
            "corpus_fingerprint": self.corpus_fingerprint,
            "split": self.split,
            "taus": list(self.taus),
            "classification": self.classification.to_dict(),
            "warnings": self.warnings.to_dict(),
            "label_counts": dict(self.label_counts),
            "created_at": self.created_at,
        }


def run_evaluation(
    model: SentenceClassifier,
    corpus: ProcessedCorpus,
    split: str = "test",
    taus: Sequence[float] = SWEEP_TAUS,
    baseline_seed: int = 0,
    run_id: str = "",
) -> EvalRunRecord:
    """Evaluate one model on one corpus split: both reports plus counts."""
    sentences = corpus.sentences(split)
    if not sentences:
        raise EmptyTestSet(f"split {split!r} has no labeled sentences")
    counts = label_distribution(sentences)
    return EvalRunRecord(
        run_id=run_id,
        model_fingerprint=model.fingerprint,
        corpus_fingerprint=corpus.fingerprint(),
        split=split,
        taus=tuple(float(t) for t in taus),
        classification=classification_report(model, sentences, baseline_seed=baseline_seed),
        warnings=warning_report(model, sentences, taus),
        label_counts={label.value: n for label, n in counts.items()},
    )
