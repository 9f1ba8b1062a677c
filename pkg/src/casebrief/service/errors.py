"""API error taxonomy and the module-exception mapping.

Every error a module can raise maps to exactly one wire code, so no
failure reaches the client as an anonymous 500 during normal operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from casebrief.classifier.types import (
    BackendUnavailable,
    EmptyText,
    EmptyTrainingSet,
    WrongBackend,
)
from casebrief.corpus.types import CorpusError, InvalidRatios, NoSectionsFound
from casebrief.session.types import (
    AlreadyResolved,
    EmptyBrief,
    InvalidLevel,
    LevelGateViolation,
    NoWorkedExample,
    SpanOutOfBounds,
    UnknownAnnotation,
    UnknownDocument,
    UnknownElement,
)
from casebrief.warnings import EmptyTestSet, InvalidThreshold

#: Wire code -> HTTP status.
ERROR_STATUS: dict[str, int] = {
    "NotFound": 404,
    "Validation": 400,
    "LevelGate": 403,
    "Conflict": 409,
    "BackendUnavailable": 503,
}


@dataclass
class ApiError(Exception):
    code: str
    message: str
    details: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.code not in ERROR_STATUS:
            raise ValueError(f"unknown ApiError code {self.code!r}")
        super().__init__(self.message)

    @property
    def status(self) -> int:
        return ERROR_STATUS[self.code]

    def to_dict(self) -> dict:
        return {"error": {"code": self.code, "message": self.message, "details": self.details}}


_EXCEPTION_CODES: tuple[tuple[type[Exception], str], ...] = (
    (UnknownDocument, "NotFound"),
    (NoWorkedExample, "NotFound"),
    (UnknownElement, "NotFound"),
    (UnknownAnnotation, "NotFound"),
    (LevelGateViolation, "LevelGate"),
    (AlreadyResolved, "Conflict"),
    (InvalidLevel, "Validation"),
    (SpanOutOfBounds, "Validation"),
    (EmptyBrief, "Validation"),
    (NoSectionsFound, "Validation"),
    (InvalidRatios, "Validation"),
    (CorpusError, "Validation"),
    (BackendUnavailable, "BackendUnavailable"),
    (EmptyText, "Validation"),
    (EmptyTrainingSet, "Validation"),
    (WrongBackend, "Validation"),
    (InvalidThreshold, "Validation"),
    (EmptyTestSet, "Validation"),
    (KeyError, "NotFound"),
    (FileNotFoundError, "NotFound"),
    (ValueError, "Validation"),
)


def to_api_error(exc: Exception) -> ApiError:
    """Translate a module exception into its wire form."""
    if isinstance(exc, ApiError):
        return exc
    for exc_type, code in _EXCEPTION_CODES:
        if isinstance(exc, exc_type):
            return ApiError(code=code, message=str(exc) or exc_type.__name__)
    raise exc
