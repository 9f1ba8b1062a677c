"""Tutoring sessions: proficiency levels, gated operations, feedback."""

from casebrief.session.engine import (
    DEFAULT_LEVEL_GATES,
    BriefExport,
    SessionEngine,
    snap_span,
)
from casebrief.session.types import (
    AlreadyResolved,
    Annotation,
    AnnotationStatus,
    EmptyBrief,
    FeedbackEvent,
    FeedbackKind,
    Highlight,
    InvalidLevel,
    LevelGateViolation,
    NoWorkedExample,
    ProficiencyLevel,
    Session,
    SessionError,
    SpanOutOfBounds,
    UnknownAnnotation,
    UnknownDocument,
    UnknownElement,
    WorkedExample,
    WorkedItem,
)

__all__ = [
    "DEFAULT_LEVEL_GATES",
    "AlreadyResolved",
    "Annotation",
    "AnnotationStatus",
    "BriefExport",
    "EmptyBrief",
    "FeedbackEvent",
    "FeedbackKind",
    "Highlight",
    "InvalidLevel",
    "LevelGateViolation",
    "NoWorkedExample",
    "ProficiencyLevel",
    "Session",
    "SessionEngine",
    "SessionError",
    "SpanOutOfBounds",
    "UnknownAnnotation",
    "UnknownDocument",
    "UnknownElement",
    "WorkedExample",
    "WorkedItem",
    "snap_span",
]
