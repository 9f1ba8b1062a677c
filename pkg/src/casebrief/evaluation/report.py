"""Evaluation reports: per-class metrics, confusion matrix, warning sweep.

Reports come in two serializations, a machine-readable dict (stable key
order, suitable for golden-file diffs) and an aligned plain-text table.
Neither embeds a timestamp, so identical inputs produce byte-identical
files for the deterministic backends.

The baseline backend is special-cased: its report rows replicate the
stratified-sampling evaluation, drawing one label per test sentence
from the stored train frequencies with a seeded generator, rather than
using the constant argmax prediction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from casebrief.classifier.baseline import BaselineModel, sample_baseline
from casebrief.classifier.linear import LinearModel
from casebrief.classifier.types import SentenceClassifier, data_digest
from casebrief.corpus.types import Sentence
from casebrief.labels import LABEL_ORDER, SectionLabel
from casebrief.metrics import MetricSummary, confusion_matrix, metrics_from_matrix
from casebrief.warnings import (
    EmptyTestSet,
    InvalidThreshold,
    WarningTable,
    sweep_pairs,
    validate_tau,
)


class FingerprintMismatch(ValueError):
    """Reports under comparison were produced on different test data."""


@dataclass(frozen=True)
class ClassificationReport:
    backend: str
    model_fingerprint: str
    test_fingerprint: str
    n_sentences: int
    matrix: tuple[tuple[int, ...], ...]
    summary: MetricSummary
    baseline_seed: int | None = None

    def to_dict(self) -> dict:
        return {
            "backend": self.backend,
            "model_fingerprint": self.model_fingerprint,
            "test_fingerprint": self.test_fingerprint,
            "n_sentences": self.n_sentences,
            "baseline_seed": self.baseline_seed,
            "per_class": {
                label.value: {
                    "precision": m.precision,
                    "recall": m.recall,
                    "f1": m.f1,
                    "support": m.support,
                    "undefined": sorted(m.undefined),
                }
                for label, m in self.summary.per_class.items()
            },
            "weighted": {
                "precision": self.summary.weighted_precision,
                "recall": self.summary.weighted_recall,
                "f1": self.summary.weighted_f1,
                "support": self.summary.total_support,
            },
            "confusion_matrix": {
                "orientation": "rows=predicted, columns=gold",
                "labels": [label.value for label in LABEL_ORDER],
                "counts": [list(row) for row in self.matrix],
            },
        }

    def render_text(self) -> str:
        width = max(len(label.value) for label in LABEL_ORDER)
        width = max(width, len("Weighted avg"))
        lines = [
            f"Classification report (backend: {self.backend}, {self.n_sentences} sentences)",
            "",
            f"{'Label'.ljust(width)}  Precision  Recall  F1      Support",
        ]
        for label in LABEL_ORDER:
            m = self.summary.per_class[label]
            flag = " *" if m.undefined else ""
            lines.append(
                f"{label.value.ljust(width)}  {m.precision:>9.4f}  {m.recall:>6.4f}"
                f"  {m.f1:>6.4f}  {m.support:>7d}{flag}"
            )
        lines.append(
            f"{'Weighted avg'.ljust(width)}  {self.summary.weighted_precision:>9.4f}"
            f"  {self.summary.weighted_recall:>6.4f}  {self.summary.weighted_f1:>6.4f}"
            f"  {self.summary.total_support:>7d}"
        )
        if any(m.undefined for m in self.summary.per_class.values()):
            lines.append("")
            lines.append("* zero-denominator metrics reported as 0")
        lines.append("")
        lines.append("Confusion matrix (rows: predicted, columns: gold)")
        col_width = max(width, 7)
        header = " " * width + "  " + "  ".join(
            label.value[:col_width].rjust(col_width) for label in LABEL_ORDER
        )
        lines.append(header)
        for i, label in enumerate(LABEL_ORDER):
            cells = "  ".join(str(self.matrix[i][j]).rjust(col_width) for j in range(len(LABEL_ORDER)))
            lines.append(f"{label.value.ljust(width)}  {cells}")
        return "\n".join(lines) + "\n"


def _predictions(
    model: SentenceClassifier, test: Sequence[Sentence], baseline_seed: int
) -> list[SectionLabel]:
    if isinstance(model, BaselineModel):
        rng = np.random.default_rng(baseline_seed)
        return [sample_baseline(model, rng) for _ in test]
    if isinstance(model, LinearModel):
        return model.predict_batch([s.text for s in test])
    return [model.predict(s.text) for s in test]


def classification_report(
    model: SentenceClassifier, test: Sequence[Sentence], baseline_seed: int = 0
) -> ClassificationReport:
    """Evaluate predictions against gold labels.

    For the baseline backend, predictions are stratified draws seeded by
    ``baseline_seed``; other backends use their deterministic argmax.
    """
    if not test:
        raise EmptyTestSet("classification report requires a non-empty test set")
    gold = [s.label for s in test]
    predicted = _predictions(model, test, baseline_seed)
    matrix = confusion_matrix(gold, predicted)
    summary = metrics_from_matrix(matrix)
    return ClassificationReport(
        backend=model.backend,
        model_fingerprint=model.fingerprint,
        test_fingerprint=data_digest(test),
        n_sentences=len(test),
        matrix=tuple(tuple(int(c) for c in row) for row in matrix),
        summary=summary,
        baseline_seed=baseline_seed if isinstance(model, BaselineModel) else None,
    )


@dataclass(frozen=True)
class WarningReport:
    backend: str
    model_fingerprint: str
    test_fingerprint: str
    n_sentences: int
    tables: tuple[WarningTable, ...]

    def to_dict(self) -> dict:
        return {
            "backend": self.backend,
            "model_fingerprint": self.model_fingerprint,
            "test_fingerprint": self.test_fingerprint,
            "n_sentences": self.n_sentences,
            "pairs": self.n_sentences * len(LABEL_ORDER),
            "tables": [
                {
                    "tau": t.tau,
                    "warn_when_should_warn": t.warn_when_should_warn,
                    "warn_when_should_abstain": t.warn_when_should_abstain,
                    "abstain_when_should_warn": t.abstain_when_should_warn,
                    "abstain_when_should_abstain": t.abstain_when_should_abstain,
                    "total_warnings": t.total_warnings,
                    "total_abstentions": t.total_abstentions,
                    "fp_rate": t.fp_rate,
                    "fn_rate": t.fn_rate,
                }
                for t in self.tables
            ],
        }

    def render_text(self) -> str:
        lines = [
            f"Warning sweep (backend: {self.backend}, {self.n_sentences} sentences,"
            f" {self.n_sentences * len(LABEL_ORDER)} pairs)",
            "",
            "tau     warn|warn  warn|abst  abst|warn  abst|abst  warnings  fp_rate  fn_rate",
        ]
        for t in self.tables:
            fp = f"{t.fp_rate:.4f}" if t.fp_rate is not None else "   n/a"
            fn = f"{t.fn_rate:.4f}" if t.fn_rate is not None else "   n/a"
            lines.append(
                f"{t.tau:<6.2f}  {t.warn_when_should_warn:>9d}  {t.warn_when_should_abstain:>9d}"
                f"  {t.abstain_when_should_warn:>9d}  {t.abstain_when_should_abstain:>9d}"
                f"  {t.total_warnings:>8d}  {fp:>7}  {fn:>7}"
            )
        return "\n".join(lines) + "\n"


def warning_report(
    model: SentenceClassifier, test: Sequence[Sentence], taus: Sequence[float]
) -> WarningReport:
    """Sweep the threshold set and tabulate warn/abstain counts per tau.

    Total warnings are checked to be non-decreasing in tau; a violation
    would mean the decision rule itself is broken, so it raises.
    """
    if not test:
        raise EmptyTestSet("warning report requires a non-empty test set")
    if not taus:
        raise InvalidThreshold("sweep needs at least one threshold")
    ordered = sorted(validate_tau(t) for t in taus)
    tables = tuple(sweep_pairs(model, test, tau) for tau in ordered)
    for earlier, later in zip(tables, tables[1:]):
        if later.total_warnings < earlier.total_warnings:
            raise RuntimeError(
                "warning counts decreased as tau grew: "
                f"{earlier.total_warnings} at {earlier.tau} vs {later.total_warnings} at {later.tau}"
            )
    return WarningReport(
        backend=model.backend,
        model_fingerprint=model.fingerprint,
        test_fingerprint=data_digest(test),
        n_sentences=len(test),
        tables=tables,
    )


@dataclass(frozen=True)
class ModelComparison:
    """Side-by-side metric deltas (second report minus first)."""

    backend_a: str
    backend_b: str
    per_class_delta: dict[SectionLabel, dict[str, float]]
    weighted_delta: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "backend_a": self.backend_a,
            "backend_b": self.backend_b,
            "per_class_delta": {
                label.value: dict(deltas) for label, deltas in self.per_class_delta.items()
            },
            "weighted_delta": dict(self.weighted_delta),
        }


def compare_models(a: ClassificationReport, b: ClassificationReport) -> ModelComparison:
    """Metric deltas between two reports over the same test data."""
    if a.test_fingerprint != b.test_fingerprint:
        raise FingerprintMismatch(
            "reports were produced on different test sets: "
            f"{a.test_fingerprint[:12]} vs {b.test_fingerprint[:12]}"
        )
    per_class = {
        label: {
            "precision": b.summary.per_class[label].precision - a.summary.per_class[label].precision,
            "recall": b.summary.per_class[label].recall - a.summary.per_class[label].recall,
            "f1": b.summary.per_class[label].f1 - a.summary.per_class[label].f1,
        }
        for label in LABEL_ORDER
    }
    weighted = {
        "precision": b.summary.weighted_precision - a.summary.weighted_precision,
        "recall": b.summary.weighted_recall - a.summary.weighted_recall,
        "f1": b.summary.weighted_f1 - a.summary.weighted_f1,
    }
    return ModelComparison(
        backend_a=a.backend,
        backend_b=b.backend,
        per_class_delta=per_class,
        weighted_delta=weighted,
    )
