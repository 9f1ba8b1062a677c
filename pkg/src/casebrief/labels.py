"""Canonical case-brief section labels.

The six sections are a closed vocabulary: everything downstream of
ingestion (classifier outputs, warning decisions, session annotations,
report rows) is expressed in terms of these labels, in the fixed
canonical order defined here.
"""

from __future__ import annotations

from enum import Enum


class SectionLabel(str, Enum):
    """The six case-brief sections a sentence can belong to."""

    FACTS = "Facts"
    ISSUE = "Issue"
    HOLDING = "Holding"
    PROCEDURAL_HISTORY = "Procedural History"
    REASONING = "Reasoning"
    RULE = "Rule"

    @classmethod
    def from_string(cls, value: str) -> "SectionLabel":
        """Parse a label from its canonical name or a compact variant.

        Accepts e.g. ``"Procedural History"``, ``"ProceduralHistory"``,
        ``"procedural_history"`` (case-insensitive). Raises ``ValueError``
        for anything outside the six-label vocabulary.
        """
        key = value.strip().lower().replace("_", " ")
        if key in _COMPACT_FORMS:
            return _COMPACT_FORMS[key]
        raise ValueError(f"unknown section label: {value!r}")


#: Fixed canonical order, used for tie-breaking, serialization and display.
LABEL_ORDER: tuple[SectionLabel, ...] = tuple(SectionLabel)

#: Number of labels; the classifier's output dimensionality.
NUM_LABELS = len(LABEL_ORDER)

_LABEL_INDEX = {label: i for i, label in enumerate(LABEL_ORDER)}

_COMPACT_FORMS = {label.value.lower(): label for label in LABEL_ORDER}
_COMPACT_FORMS.update(
    {label.value.replace(" ", "").lower(): label for label in LABEL_ORDER}
)


def label_index(label: SectionLabel) -> int:
    """Position of ``label`` in the canonical order."""
    return _LABEL_INDEX[label]
