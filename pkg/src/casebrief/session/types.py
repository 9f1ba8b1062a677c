"""Session domain model: levels, annotations, feedback, worked examples.

A session binds one user at one proficiency level to one document. The
level never changes silently; it decides which operations the engine
permits. Annotations are sentence-snapped spans with a lifecycle status:
"user" for manual submissions, "suggested" for model proposals awaiting
review, "confirmed" once reviewed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum, IntEnum

from casebrief.labels import LABEL_ORDER, SectionLabel


class SessionError(Exception):
    """Base class for session errors."""


class InvalidLevel(SessionError):
    """Proficiency level outside 1..5."""


class UnknownDocument(SessionError):
    """Session refers to a document the store does not hold."""


class LevelGateViolation(SessionError):
    """Operation not permitted at the session's level."""


class NoWorkedExample(SessionError):
    """No curated expert annotation set exists for the document."""


class UnknownElement(SessionError):
    """Categorization target is not an element of the worked example."""


class SpanOutOfBounds(SessionError):
    """Span lies outside the document or covers no sentence."""


class UnknownAnnotation(SessionError):
    """No annotation with the given id (or it is not a suggestion)."""


class AlreadyResolved(SessionError):
    """The suggestion was already confirmed or corrected."""


class EmptyBrief(SessionError):
    """Export requires at least one user or confirmed annotation."""


class ProficiencyLevel(IntEnum):
    """The five competency levels gating system behavior."""

    FUNDAMENTAL_AWARENESS = 1
    NOVICE = 2
    INTERMEDIATE = 3
    ADVANCED = 4
    EXPERT = 5

    @classmethod
    def parse(cls, value: int) -> "ProficiencyLevel":
        try:
            return cls(int(value))
        except ValueError as exc:
            raise InvalidLevel(f"proficiency level must be 1..5, got {value!r}") from exc


class AnnotationStatus(str, Enum):
    USER = "user"
    SUGGESTED = "suggested"
    CONFIRMED = "confirmed"


class FeedbackKind(str, Enum):
    EXPERT_REVEAL = "ExpertReveal"
    WARNING = "Warning"
    SUGGESTION_SHOWN = "SuggestionShown"
    CORRECTION = "Correction"


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class Annotation:
    annotation_id: str
    span: tuple[int, int]
    sentence_ids: tuple[str, ...]
    text: str
    label: SectionLabel
    status: AnnotationStatus

    def to_dict(self) -> dict:
        return {
            "annotation_id": self.annotation_id,
            "span": list(self.span),
            "sentence_ids": list(self.sentence_ids),
            "text": self.text,
            "label": self.label.value,
            "status": self.status.value,
        }

    @classmethod
    def from_dict(cls, record: dict) -> "Annotation":
        return cls(
            annotation_id=record["annotation_id"],
            span=(record["span"][0], record["span"][1]),
            sentence_ids=tuple(record.get("sentence_ids", ())),
            text=record["text"],
            label=SectionLabel(record["label"]),
            status=AnnotationStatus(record["status"]),
        )


@dataclass(frozen=True)
class FeedbackEvent:
    kind: FeedbackKind
    payload: dict
    created_at: str = field(default_factory=_now)

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "payload": dict(self.payload), "created_at": self.created_at}

    @classmethod
    def from_dict(cls, record: dict) -> "FeedbackEvent":
        return cls(
            kind=FeedbackKind(record["kind"]),
            payload=dict(record.get("payload", {})),
            created_at=record.get("created_at", _now()),
        )


@dataclass(frozen=True)
class WorkedItem:
    """One expert annotation with its justification."""

    span: tuple[int, int]
    label: SectionLabel
    explanation: str

    def __post_init__(self) -> None:
        if not self.explanation.strip():
            raise ValueError("every worked-example annotation needs a non-empty explanation")


@dataclass(frozen=True)
class WorkedExample:
    doc_id: str
    items: tuple[WorkedItem, ...]

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "items": [
                {"span": list(i.span), "label": i.label.value, "explanation": i.explanation}
                for i in self.items
            ],
        }

    @classmethod
    def from_dict(cls, record: dict) -> "WorkedExample":
        return cls(
            doc_id=record["doc_id"],
            items=tuple(
                WorkedItem(
                    span=(i["span"][0], i["span"][1]),
                    label=SectionLabel(i["label"]),
                    explanation=i["explanation"],
                )
                for i in record["items"]
            ),
        )


@dataclass(frozen=True)
class Highlight:
    sent_id: str
    span: tuple[int, int]
    predicted_label: SectionLabel
    confidence: float

    def to_dict(self) -> dict:
        return {
            "sent_id": self.sent_id,
            "span": list(self.span),
            "predicted_label": self.predicted_label.value,
            "confidence": self.confidence,
        }


@dataclass
class Session:
    session_id: str
    user_id: str
    level: ProficiencyLevel
    doc_id: str
    annotations: list[Annotation] = field(default_factory=list)
    feedback_log: list[FeedbackEvent] = field(default_factory=list)
    created_at: str = field(default_factory=_now)

    def annotation(self, annotation_id: str) -> Annotation:
        for a in self.annotations:
            if a.annotation_id == annotation_id:
                return a
        raise UnknownAnnotation(f"no annotation {annotation_id!r} in session {self.session_id}")

    def brief_draft(self) -> dict[SectionLabel, list[Annotation]]:
        """User and confirmed annotations grouped by label, in document order."""
        draft: dict[SectionLabel, list[Annotation]] = {label: [] for label in LABEL_ORDER}
        kept = [
            a
            for a in self.annotations
            if a.status in (AnnotationStatus.USER, AnnotationStatus.CONFIRMED)
        ]
        for a in sorted(kept, key=lambda a: (a.span[0], a.span[1], a.annotation_id)):
            draft[a.label].append(a)
        return draft

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "user_id": self.user_id,
            "level": int(self.level),
            "doc_id": self.doc_id,
            "annotations": [a.to_dict() for a in self.annotations],
            "feedback_log": [e.to_dict() for e in self.feedback_log],
            "created_at": self.created_at,
        }

    @classmethod
    def from_dict(cls, record: dict) -> "Session":
        return cls(
            session_id=record["session_id"],
            user_id=record["user_id"],
            level=ProficiencyLevel.parse(record["level"]),
            doc_id=record["doc_id"],
            annotations=[Annotation.from_dict(a) for a in record.get("annotations", [])],
            feedback_log=[FeedbackEvent.from_dict(e) for e in record.get("feedback_log", [])],
            created_at=record.get("created_at", _now()),
        )
