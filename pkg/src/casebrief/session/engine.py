"""The tutoring state machine: level-gated operations over one session.

Gating is total: every operation here is either permitted at the
session's level by the gating table or rejected with
``LevelGateViolation``; nothing silently no-ops. The engine itself is
storage-agnostic: it mutates ``Session`` objects in place and leaves
persistence to the caller.

The per-level allocation of capabilities:

  level 1: study a worked example (read-only, with explanations)
  level 2: categorize expert-chosen elements, mismatch reveals the answer
  level 3: free annotation with the model as a safeguard (warnings)
  level 4: free annotation plus model suggestions to review
  level 5: everything at 4 plus whole-document confidence highlighting

Brief export is deliberately ungated: any session may export what it
has (failing with ``EmptyBrief`` when there is nothing).
"""

from __future__ import annotations

from dataclasses import dataclass

from casebrief.classifier.types import SentenceClassifier, argmax_label
from casebrief.corpus.types import CaseBrief, DocSentence
from casebrief.labels import LABEL_ORDER, SectionLabel
from casebrief.session.types import (
    AlreadyResolved,
    Annotation,
    AnnotationStatus,
    EmptyBrief,
    FeedbackEvent,
    FeedbackKind,
    Highlight,
    LevelGateViolation,
    NoWorkedExample,
    ProficiencyLevel,
    Session,
    SpanOutOfBounds,
    UnknownAnnotation,
    UnknownElement,
    WorkedExample,
)
from casebrief.warnings import DEFAULT_TAU, WarningDecision, check_assignment

#: Level -> operations permitted at that level.
DEFAULT_LEVEL_GATES: dict[int, frozenset[str]] = {
    1: frozenset({"get_worked_example"}),
    2: frozenset({"submit_categorization"}),
    3: frozenset({"submit_annotation"}),
    4: frozenset({"submit_annotation", "suggest_category", "resolve_suggestion"}),
    5: frozenset(
        {"submit_annotation", "suggest_category", "resolve_suggestion", "highlight_document"}
    ),
}


def snap_span(document: CaseBrief, span: tuple[int, int]) -> tuple[tuple[int, int], list[DocSentence]]:
    """Snap a selection to the sentences it touches.

    Returns the covering span (start of the first touched sentence to
    end of the last) and those sentences in document order. A span
    outside the document, empty, or touching no sentence at all is
    rejected.
    """
    start, end = int(span[0]), int(span[1])
    if start < 0 or end > len(document.body) or start >= end:
        raise SpanOutOfBounds(
            f"span ({start}, {end}) outside document of length {len(document.body)}"
        )
    covered = [s for s in document.sentences if s.char_span[0] < end and start < s.char_span[1]]
    if not covered:
        raise SpanOutOfBounds(f"span ({start}, {end}) covers no sentence")
    snapped = (covered[0].char_span[0], covered[-1].char_span[1])
    return snapped, covered


@dataclass(frozen=True)
class BriefExport:
    """A session's brief: six sections in canonical order, with provenance."""

    doc_id: str
    title: str
    sections: dict[SectionLabel, list[Annotation]]

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "title": self.title,
            "sections": [
                {
                    "label": label.value,
                    "spans": [a.to_dict() for a in self.sections[label]],
                }
                for label in LABEL_ORDER
            ],
        }


class SessionEngine:
    """Executes session operations against one document and one model."""

    def __init__(
        self,
        document: CaseBrief,
        model: SentenceClassifier,
        worked_example: WorkedExample | None = None,
        tau: float = DEFAULT_TAU,
        level_gates: dict[int, frozenset[str]] | None = None,
        reveal_explanations: bool = False,
    ) -> None:
        self.document = document
        self.model = model
        self.worked_example = worked_example
        self.tau = tau
        self.level_gates = level_gates if level_gates is not None else DEFAULT_LEVEL_GATES
        self.reveal_explanations = reveal_explanations

    def _gate(self, session: Session, operation: str) -> None:
        allowed = self.level_gates.get(int(session.level), frozenset())
        if operation not in allowed:
            raise LevelGateViolation(
                f"{operation} is not available at level {int(session.level)}"
            )

    def get_worked_example(self, session: Session) -> WorkedExample:
        """Level 1: the full expert annotation set, explanations included."""
        self._gate(session, "get_worked_example")
        if self.worked_example is None:
            raise NoWorkedExample(f"no worked example for document {session.doc_id!r}")
        return self.worked_example

    def categorization_elements(self) -> list[dict]:
        """Expert-chosen spans without their labels, for level-2 practice."""
        if self.worked_example is None:
            return []
        return [
            {
                "element_id": i,
                "span": list(item.span),
                "text": self.document.body[item.span[0] : item.span[1]],
            }
            for i, item in enumerate(self.worked_example.items)
        ]

    def submit_categorization(
        self, session: Session, element_id: int, label: SectionLabel
    ) -> FeedbackEvent:
        """Level 2: check the learner's label for one expert element.

        A match yields a confirmation event; a mismatch reveals the
        expert's label (and, if configured, the expert's explanation).
        """
        self._gate(session, "submit_categorization")
        if self.worked_example is None:
            raise NoWorkedExample(f"no worked example for document {session.doc_id!r}")
        if not 0 <= element_id < len(self.worked_example.items):
            raise UnknownElement(f"no element {element_id!r} in the worked example")
        item = self.worked_example.items[element_id]
        if label == item.label:
            event = FeedbackEvent(
                kind=FeedbackKind.CORRECTION,
                payload={
                    "element_id": element_id,
                    "submitted_label": label.value,
                    "match": True,
                },
            )
        else:
            payload = {
                "element_id": element_id,
                "submitted_label": label.value,
                "expert_label": item.label.value,
                "match": False,
            }
            if self.reveal_explanations:
                payload["explanation"] = item.explanation
            event = FeedbackEvent(kind=FeedbackKind.EXPERT_REVEAL, payload=payload)
        session.feedback_log.append(event)
        return event

    def submit_annotation(
        self, session: Session, span: tuple[int, int], label: SectionLabel
    ) -> WarningDecision | None:
        """Levels 3-5: store a manual annotation.

        At level 3 the safeguard checks the assignment and the decision
        is returned (and logged when it warns); the annotation is stored
        either way. At levels 4-5 no check runs.
        """
        self._gate(session, "submit_annotation")
        snapped, covered = snap_span(self.document, span)
        annotation = Annotation(
            annotation_id=f"a{len(session.annotations) + 1}",
            span=snapped,
            sentence_ids=tuple(s.sent_id for s in covered),
            text=self.document.body[snapped[0] : snapped[1]],
            label=label,
            status=AnnotationStatus.USER,
        )
        session.annotations.append(annotation)
        if session.level != ProficiencyLevel.INTERMEDIATE:
            return None
        decision = check_assignment(self.model, annotation.text, label, self.tau)
        if decision.is_warning:
            session.feedback_log.append(
                FeedbackEvent(
                    kind=FeedbackKind.WARNING,
                    payload={
                        "annotation_id": annotation.annotation_id,
                        "label": label.value,
                        "prob_assigned": decision.prob_assigned,
                        "tau": decision.tau,
                    },
                )
            )
        return decision

    def suggest_category(
        self, session: Session, span: tuple[int, int]
    ) -> tuple[Annotation, dict[SectionLabel, float]]:
        """Levels 4-5: model-proposed label for a user-chosen span.

        The proposal is stored as a "suggested" annotation awaiting
        resolve_suggestion; the full distribution is returned for
        display.
        """
        self._gate(session, "suggest_category")
        snapped, covered = snap_span(self.document, span)
        text = self.document.body[snapped[0] : snapped[1]]
        probs = self.model.predict_proba(text)
        predicted = argmax_label(probs)
        annotation = Annotation(
            annotation_id=f"a{len(session.annotations) + 1}",
            span=snapped,
            sentence_ids=tuple(s.sent_id for s in covered),
            text=text,
            label=predicted,
            status=AnnotationStatus.SUGGESTED,
        )
        session.annotations.append(annotation)
        session.feedback_log.append(
            FeedbackEvent(
                kind=FeedbackKind.SUGGESTION_SHOWN,
                payload={
                    "annotation_id": annotation.annotation_id,
                    "predicted_label": predicted.value,
                    "probs": {label.value: p for label, p in probs.items()},
                },
            )
        )
        return annotation, probs

    def resolve_suggestion(
        self,
        session: Session,
        annotation_id: str,
        action: str,
        corrected_label: SectionLabel | None = None,
    ) -> Annotation:
        """Levels 4-5: confirm a suggestion or correct its label."""
        self._gate(session, "resolve_suggestion")
        annotation = session.annotation(annotation_id)
        if annotation.status is AnnotationStatus.CONFIRMED:
            raise AlreadyResolved(f"annotation {annotation_id!r} was already resolved")
        if annotation.status is not AnnotationStatus.SUGGESTED:
            raise UnknownAnnotation(f"annotation {annotation_id!r} is not a suggestion")
        if action == "confirm":
            annotation.status = AnnotationStatus.CONFIRMED
        elif action == "correct":
            if corrected_label is None:
                raise ValueError("correct action needs a label")
            predicted = annotation.label
            annotation.label = corrected_label
            annotation.status = AnnotationStatus.CONFIRMED
            session.feedback_log.append(
                FeedbackEvent(
                    kind=FeedbackKind.CORRECTION,
                    payload={
                        "annotation_id": annotation_id,
                        "predicted_label": predicted.value,
                        "corrected_label": corrected_label.value,
                        "match": False,
                    },
                )
            )
        else:
            raise ValueError(f"action must be 'confirm' or 'correct', got {action!r}")
        return annotation

    def highlight_document(self, session: Session) -> list[Highlight]:
        """Level 5: one highlight per document sentence, in order."""
        self._gate(session, "highlight_document")
        highlights = []
        for sentence in self.document.sentences:
            probs = self.model.predict_proba(sentence.text)
            predicted = argmax_label(probs)
            highlights.append(
                Highlight(
                    sent_id=sentence.sent_id,
                    span=sentence.char_span,
                    predicted_label=predicted,
                    confidence=probs[predicted],
                )
            )
        return highlights

    def export_brief(self, session: Session) -> BriefExport:
        """Any level: the brief draft as six canonical sections."""
        draft = session.brief_draft()
        if not any(draft.values()):
            raise EmptyBrief(f"session {session.session_id} has no annotations to export")
        return BriefExport(
            doc_id=self.document.doc_id,
            title=self.document.title,
            sections=draft,
        )
