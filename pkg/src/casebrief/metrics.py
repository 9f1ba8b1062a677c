"""Classification metrics over the six section labels.

One convention used everywhere: the confusion matrix has predicted
labels on rows and gold labels on columns, and every metric is
recomputable from that matrix alone. Cells whose denominator is zero
are reported as 0.0 and flagged, so downstream consumers can tell a
true zero from an undefined one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from casebrief.labels import LABEL_ORDER, NUM_LABELS, SectionLabel, label_index


@dataclass(frozen=True)
class ClassMetrics:
    """Precision/recall/F1 and gold support for one label.

    ``undefined`` names the metrics whose denominator was zero; their
    value is reported as 0.0.
    """

    precision: float
    recall: float
    f1: float
    support: int
    undefined: frozenset[str] = frozenset()


@dataclass(frozen=True)
class MetricSummary:
    """Per-class metrics plus support-weighted averages."""

    per_class: dict[SectionLabel, ClassMetrics]
    weighted_precision: float
    weighted_recall: float
    weighted_f1: float
    total_support: int


def confusion_matrix(
    gold: Sequence[SectionLabel], predicted: Sequence[SectionLabel]
) -> np.ndarray:
    """Count matrix M with M[i, j] = #(predicted = label i, gold = label j)."""
    if len(gold) != len(predicted):
        raise ValueError(f"length mismatch: {len(gold)} gold vs {len(predicted)} predicted")
    matrix = np.zeros((NUM_LABELS, NUM_LABELS), dtype=np.int64)
    for g, p in zip(gold, predicted):
        matrix[label_index(p), label_index(g)] += 1
    return matrix


def metrics_from_matrix(matrix: np.ndarray) -> MetricSummary:
    """Derive all metrics from a predicted-rows, gold-columns matrix."""
    matrix = np.asarray(matrix)
    if matrix.shape != (NUM_LABELS, NUM_LABELS):
        raise ValueError(f"expected a {NUM_LABELS}x{NUM_LABELS} matrix, got {matrix.shape}")

    predicted_totals = matrix.sum(axis=1)
    supports = matrix.sum(axis=0)
    per_class: dict[SectionLabel, ClassMetrics] = {}
    for i, label in enumerate(LABEL_ORDER):
        tp = float(matrix[i, i])
        undefined: set[str] = set()
        if predicted_totals[i] > 0:
            precision = tp / float(predicted_totals[i])
        else:
            precision = 0.0
            undefined.add("precision")
        if supports[i] > 0:
            recall = tp / float(supports[i])
        else:
            recall = 0.0
            undefined.add("recall")
        if precision + recall > 0:
            f1 = 2 * precision * recall / (precision + recall)
        else:
            f1 = 0.0
            undefined.add("f1")
        per_class[label] = ClassMetrics(
            precision=precision,
            recall=recall,
            f1=f1,
            support=int(supports[i]),
            undefined=frozenset(undefined),
        )

    total = int(supports.sum())
    if total == 0:
        raise ValueError("empty matrix: no gold labels to weight by")
    weighted = {
        name: sum(getattr(m, name) * m.support for m in per_class.values()) / total
        for name in ("precision", "recall", "f1")
    }
    return MetricSummary(
        per_class=per_class,
        weighted_precision=weighted["precision"],
        weighted_recall=weighted["recall"],
        weighted_f1=weighted["f1"],
        total_support=total,
    )


def evaluate_predictions(
    gold: Sequence[SectionLabel], predicted: Sequence[SectionLabel]
) -> tuple[np.ndarray, MetricSummary]:
    matrix = confusion_matrix(gold, predicted)
    return matrix, metrics_from_matrix(matrix)


def weighted_f1(gold: Sequence[SectionLabel], predicted: Sequence[SectionLabel]) -> float:
    """Support-weighted F1, the model-selection and headline metric."""
    _, summary = evaluate_predictions(gold, predicted)
    return summary.weighted_f1
