"""Evaluation harness: classification and warning reports, comparisons."""

from casebrief.evaluation.records import EvalRunRecord, run_evaluation
from casebrief.evaluation.report import (
    ClassificationReport,
    FingerprintMismatch,
    ModelComparison,
    WarningReport,
    classification_report,
    compare_models,
    warning_report,
)

__all__ = [
    "ClassificationReport",
    "EvalRunRecord",
    "FingerprintMismatch",
    "ModelComparison",
    "WarningReport",
    "classification_report",
    "compare_models",
    "run_evaluation",
    "warning_report",
]
