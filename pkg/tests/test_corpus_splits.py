"""Dataset splitting: determinism, floor allocation, validation errors."""

import pytest

from casebrief.corpus.splits import label_distribution, make_splits
from casebrief.corpus.types import DatasetSplit, InvalidRatios, RawBrief
from casebrief.labels import LABEL_ORDER, SectionLabel

from conftest import make_sentence


def corpus_of(n, prefix="doc"):
    return [RawBrief(doc_id=f"{prefix}{i:04d}", title=f"T{i}", body="x") for i in range(n)]


def test_floor_allocation_715_documents():
    split = make_splits(corpus_of(715), seed=7)
    assert (len(split.train), len(split.validation), len(split.test)) == (500, 107, 108)


def test_partition_is_disjoint_and_covers():
    docs = corpus_of(101)
    split = make_splits(docs, seed=3)
    all_ids = {d.doc_id for d in docs}
    assert split.train | split.validation | split.test == all_ids
    assert not split.train & split.validation
    assert not split.train & split.test
    assert not split.validation & split.test


def test_same_seed_reproduces_exactly():
    docs = corpus_of(50)
    a = make_splits(docs, seed=11)
    b = make_splits(docs, seed=11)
    assert a == b


def test_different_seed_changes_assignment():
    docs = corpus_of(200)
    a = make_splits(docs, seed=1)
    b = make_splits(docs, seed=2)
    assert a.train != b.train


def test_input_order_does_not_matter():
    docs = corpus_of(40)
    forward = make_splits(docs, seed=5)
    backward = make_splits(list(reversed(docs)), seed=5)
    assert forward == backward


def test_tiny_corpus_goes_entirely_to_train():
    for n in (1, 2):
        split = make_splits(corpus_of(n), seed=0)
        assert len(split.train) == n
        assert not split.validation
        assert not split.test


def test_three_documents_get_one_each_under_default_ratios():
    split = make_splits(corpus_of(3), seed=0)
    # floor(3*.70)=2 train, floor(3*.15)=0 validation, remainder 1 test
    assert (len(split.train), len(split.validation), len(split.test)) == (2, 0, 1)


@pytest.mark.parametrize(
    "ratios",
    [
        (0.5, 0.5, 0.5),
        (0.9, 0.2, -0.1),
        (1.0, 0.0),
        (0.25, 0.25, 0.25, 0.25),
    ],
)
def test_bad_ratios_rejected(ratios):
    with pytest.raises(InvalidRatios):
        make_splits(corpus_of(10), seed=0, ratios=ratios)


def test_empty_corpus_rejected():
    with pytest.raises(InvalidRatios):
        make_splits([], seed=0)


def test_duplicate_doc_ids_rejected():
    docs = corpus_of(5) + [RawBrief(doc_id="doc0002", title="dup", body="y")]
    with pytest.raises(ValueError, match="doc0002"):
        make_splits(docs, seed=0)


def test_assignment_maps_every_document():
    split = make_splits(corpus_of(20), seed=9)
    assignment = split.assignment()
    assert len(assignment) == 20
    assert set(assignment.values()) <= {"train", "validation", "test"}
    assert all(doc in split.subset(name) for doc, name in assignment.items())


def test_subset_rejects_unknown_name():
    split = make_splits(corpus_of(5), seed=0)
    with pytest.raises(ValueError):
        split.subset("dev")


def test_label_distribution_includes_absent_labels():
    sentences = [
        make_sentence(0, SectionLabel.FACTS),
        make_sentence(1, SectionLabel.FACTS),
        make_sentence(2, SectionLabel.RULE),
    ]
    dist = label_distribution(sentences)
    assert list(dist) == list(LABEL_ORDER)
    assert dist[SectionLabel.FACTS] == 2
    assert dist[SectionLabel.RULE] == 1
    assert dist[SectionLabel.ISSUE] == 0
    assert sum(dist.values()) == 3
