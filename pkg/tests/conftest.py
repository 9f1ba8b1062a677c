"""Shared test fixtures and the lookup-table probability stub."""

from __future__ import annotations

import numpy as np
import pytest

from casebrief.classifier.types import SentenceClassifier
from casebrief.corpus.segment import ingest_brief, load_heading_patterns
from casebrief.corpus.types import RawBrief, Sentence
from casebrief.labels import LABEL_ORDER, SectionLabel


class TableModel(SentenceClassifier):
    """Classifier stub driven entirely by a text -> distribution table.

    Texts absent from the table get the default distribution (uniform
    unless overridden). Used wherever a test needs exact control over
    probabilities, independent of any trained backend.
    """

    backend = "table"

    def __init__(self, table=None, default=None, fingerprint="table-stub"):
        self.table = dict(table or {})
        if default is None:
            default = [1.0 / len(LABEL_ORDER)] * len(LABEL_ORDER)
        self.default = list(default)
        self.fingerprint = fingerprint
        self.epoch_scores = ()
        self.best_epoch = None

    def predict_proba(self, text):
        self.require_text(text)
        probs = self.table.get(text, self.default)
        return {label: float(p) for label, p in zip(LABEL_ORDER, probs)}


def make_sentence(i, label, text=None, doc_id="doc"):
    if text is None:
        text = f"sentence number {i}"
    return Sentence(
        sent_id=f"{doc_id}:{i:04d}",
        doc_id=doc_id,
        label=label,
        text=text,
        char_span=(0, len(text)),
    )


def random_distribution(rng, spiky=False):
    """A random probability vector; spiky ones concentrate mass."""
    raw = rng.random(len(LABEL_ORDER))
    if spiky:
        raw = raw**4
    raw = raw + 1e-9
    return list(raw / raw.sum())


TWO_SECTION_BODY = (
    "Pierce v. Ashford\n"
    "\n"
    "Facts:\n"
    "The tenant reported the leak in March. The landlord never replied.\n"
    "\n"
    "Issue:\n"
    "Whether silence after notice waives the repair covenant.\n"
)


@pytest.fixture(scope="session")
def heading_phrases():
    return load_heading_patterns()


@pytest.fixture
def two_section_brief(heading_phrases):
    raw = RawBrief(doc_id="pierce", title="Pierce v. Ashford", body=TWO_SECTION_BODY)
    return ingest_brief(raw, heading_phrases)


@pytest.fixture
def uniform_model():
    return TableModel()


SEPARABLE_MARKERS = {
    SectionLabel.FACTS: "plaintiff",
    SectionLabel.ISSUE: "whether",
    SectionLabel.HOLDING: "affirmed",
    SectionLabel.PROCEDURAL_HISTORY: "appealed",
    SectionLabel.REASONING: "because",
    SectionLabel.RULE: "statute",
}


@pytest.fixture(scope="session")
def separable_toy():
    """12 sentences, 2 per label, each with that label's private marker."""
    sentences = []
    for label in LABEL_ORDER:
        marker = SEPARABLE_MARKERS[label]
        for k, template in enumerate((f"The court {marker} here.", f"A party {marker} today.")):
            sentences.append(
                make_sentence(len(sentences), label, template, doc_id="toy")
            )
    return sentences


@pytest.fixture(scope="session")
def anyio_backend():
    return "asyncio"


def label_probs(**kwargs):
    """Distribution from keyword shorthand: facts=0.9, issue=0.02, ..."""
    by_name = {
        "facts": SectionLabel.FACTS,
        "issue": SectionLabel.ISSUE,
        "holding": SectionLabel.HOLDING,
        "procedural_history": SectionLabel.PROCEDURAL_HISTORY,
        "reasoning": SectionLabel.REASONING,
        "rule": SectionLabel.RULE,
    }
    probs = {label: 0.0 for label in LABEL_ORDER}
    for name, value in kwargs.items():
        probs[by_name[name]] = value
    remainder = 1.0 - sum(probs.values())
    unset = [label for label in LABEL_ORDER if probs[label] == 0.0]
    if unset and remainder > 0:
        for label in unset:
            probs[label] = remainder / len(unset)
    return [probs[label] for label in LABEL_ORDER]


def assert_distribution(probs):
    values = np.array([probs[label] for label in LABEL_ORDER])
    assert (values >= 0).all()
    assert abs(values.sum() - 1.0) < 1e-9
