"""Session domain objects: parsing, round trips, draft assembly."""

import pytest

from casebrief.labels import LABEL_ORDER, SectionLabel
from casebrief.session.types import (
    Annotation,
    AnnotationStatus,
    FeedbackEvent,
    FeedbackKind,
    InvalidLevel,
    ProficiencyLevel,
    Session,
    UnknownAnnotation,
    WorkedExample,
    WorkedItem,
)


def test_level_parse_accepts_one_through_five():
    for n in range(1, 6):
        level = ProficiencyLevel.parse(n)
        assert int(level) == n
    assert ProficiencyLevel.parse(3) is ProficiencyLevel.INTERMEDIATE
    assert ProficiencyLevel.parse("4") is ProficiencyLevel.ADVANCED


@pytest.mark.parametrize("bad", [0, 6, -1, 17])
def test_level_parse_rejects_out_of_range(bad):
    with pytest.raises(InvalidLevel):
        ProficiencyLevel.parse(bad)


def test_level_order_is_numeric():
    assert ProficiencyLevel.FUNDAMENTAL_AWARENESS < ProficiencyLevel.NOVICE
    assert ProficiencyLevel.EXPERT == 5


def make_annotation(aid="a1", span=(0, 10), label=SectionLabel.FACTS, status=AnnotationStatus.USER):
    return Annotation(
        annotation_id=aid,
        span=span,
        sentence_ids=("doc:0000",),
        text="some text.",
        label=label,
        status=status,
    )


def test_annotation_round_trip():
    annotation = make_annotation()
    record = annotation.to_dict()
    assert record["label"] == "Facts"
    assert record["status"] == "user"
    assert record["span"] == [0, 10]
    assert Annotation.from_dict(record) == annotation


def test_feedback_event_round_trip():
    event = FeedbackEvent(kind=FeedbackKind.WARNING, payload={"tau": 0.05})
    back = FeedbackEvent.from_dict(event.to_dict())
    assert back.kind is FeedbackKind.WARNING
    assert back.payload == {"tau": 0.05}
    assert back.created_at == event.created_at


def test_worked_item_requires_explanation():
    with pytest.raises(ValueError):
        WorkedItem(span=(0, 5), label=SectionLabel.FACTS, explanation="   ")


def test_worked_example_round_trip():
    example = WorkedExample(
        doc_id="d",
        items=(
            WorkedItem(span=(0, 5), label=SectionLabel.FACTS, explanation="why"),
            WorkedItem(span=(6, 12), label=SectionLabel.ISSUE, explanation="because"),
        ),
    )
    assert WorkedExample.from_dict(example.to_dict()) == example


def test_session_round_trip():
    session = Session(
        session_id="s1",
        user_id="u1",
        level=ProficiencyLevel.INTERMEDIATE,
        doc_id="d1",
        annotations=[make_annotation()],
        feedback_log=[FeedbackEvent(kind=FeedbackKind.CORRECTION, payload={})],
    )
    back = Session.from_dict(session.to_dict())
    assert back == session
    assert back.level is ProficiencyLevel.INTERMEDIATE


def test_session_annotation_lookup():
    session = Session(
        session_id="s", user_id="u", level=ProficiencyLevel.EXPERT, doc_id="d",
        annotations=[make_annotation("a1"), make_annotation("a2")],
    )
    assert session.annotation("a2").annotation_id == "a2"
    with pytest.raises(UnknownAnnotation):
        session.annotation("a9")


def test_brief_draft_groups_sorts_and_drops_suggestions():
    session = Session(
        session_id="s", user_id="u", level=ProficiencyLevel.EXPERT, doc_id="d",
        annotations=[
            make_annotation("a1", span=(40, 50), label=SectionLabel.FACTS),
            make_annotation("a2", span=(0, 10), label=SectionLabel.FACTS,
                            status=AnnotationStatus.CONFIRMED),
            make_annotation("a3", span=(20, 30), label=SectionLabel.ISSUE),
            make_annotation("a4", span=(5, 15), label=SectionLabel.FACTS,
                            status=AnnotationStatus.SUGGESTED),
        ],
    )
    draft = session.brief_draft()
    assert list(draft) == list(LABEL_ORDER)
    assert [a.annotation_id for a in draft[SectionLabel.FACTS]] == ["a2", "a1"]
    assert [a.annotation_id for a in draft[SectionLabel.ISSUE]] == ["a3"]
    assert draft[SectionLabel.RULE] == []
    flattened = [a.annotation_id for anns in draft.values() for a in anns]
    assert "a4" not in flattened
