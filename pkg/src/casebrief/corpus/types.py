"""Document model for ingested case briefs.

A ``RawBrief`` is the unprocessed input. Ingestion turns it into a
``CaseBrief``: heading-segmented sections plus a sentence inventory with
absolute character offsets into the body. ``Sentence`` is the
machine-learning record (mapped sections only, offsets relative to the
section text); ``DocSentence`` is the display/session record covering
every sentence of the document, mapped or not.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from casebrief.labels import SectionLabel


class CorpusError(Exception):
    """Base class for corpus ingestion errors."""


class NoSectionsFound(CorpusError):
    """No heading pattern matched anywhere in a document body."""


class InvalidRatios(CorpusError):
    """Split ratios are negative or do not sum to one."""


@dataclass(frozen=True)
class RawBrief:
    """An unprocessed case brief as retrieved from the input file."""

    doc_id: str
    title: str
    body: str

    def __post_init__(self) -> None:
        if not self.doc_id:
            raise ValueError("doc_id must be non-empty")
        if not self.body:
            raise ValueError(f"brief {self.doc_id!r} has an empty body")


@dataclass(frozen=True)
class BriefSection:
    """One heading-delimited region of a brief.

    ``label`` is ``None`` when the heading did not normalize to one of
    the six canonical sections; such sections are kept for display but
    contribute no sentences to the dataset. ``char_span`` addresses the
    section text within the original body: ``body[start:end] == text``.
    """

    heading_raw: str
    label: SectionLabel | None
    text: str
    char_span: tuple[int, int]


@dataclass(frozen=True)
class Sentence:
    """A dataset sentence: gold label plus offsets into its section text."""

    sent_id: str
    doc_id: str
    label: SectionLabel
    text: str
    char_span: tuple[int, int]

    def __post_init__(self) -> None:
        if not self.text.strip():
            raise ValueError(f"sentence {self.sent_id!r} is empty")


@dataclass(frozen=True)
class DocSentence:
    """A sentence of the full document, with absolute body offsets.

    Unlike ``Sentence``, this includes sentences from unmapped sections
    (``label`` is ``None`` there) so sessions can highlight and snap
    selections anywhere in the text.
    """

    sent_id: str
    label: SectionLabel | None
    text: str
    char_span: tuple[int, int]


@dataclass(frozen=True)
class CaseBrief:
    """A fully ingested document: sections plus sentence inventory."""

    doc_id: str
    title: str
    body: str
    sections: tuple[BriefSection, ...]
    sentences: tuple[DocSentence, ...] = field(default=())

    def dataset_sentences(self) -> list[Sentence]:
        """Sentences of mapped sections, as dataset records.

        Offsets are re-expressed relative to the owning section's text,
        per the interchange contract. Unmapped sections contribute
        nothing.
        """
        out: list[Sentence] = []
        for sent in self.sentences:
            if sent.label is None:
                continue
            section = self._section_at(sent.char_span[0])
            rel_start = sent.char_span[0] - section.char_span[0]
            rel_end = sent.char_span[1] - section.char_span[0]
            out.append(
                Sentence(
                    sent_id=sent.sent_id,
                    doc_id=self.doc_id,
                    label=sent.label,
                    text=sent.text,
                    char_span=(rel_start, rel_end),
                )
            )
        return out

    def _section_at(self, offset: int) -> BriefSection:
        for section in self.sections:
            if section.char_span[0] <= offset < max(section.char_span[1], section.char_span[0] + 1):
                return section
        raise ValueError(f"offset {offset} outside all sections of {self.doc_id!r}")


@dataclass(frozen=True)
class DatasetSplit:
    """A document-basis train/validation/test partition."""

    train: frozenset[str]
    validation: frozenset[str]
    test: frozenset[str]
    seed: int
    ratios: tuple[float, float, float] = (0.70, 0.15, 0.15)

    def assignment(self) -> dict[str, str]:
        """Map every doc_id to its split name."""
        out = {doc_id: "train" for doc_id in self.train}
        out.update({doc_id: "validation" for doc_id in self.validation})
        out.update({doc_id: "test" for doc_id in self.test})
        return out

    def subset(self, name: str) -> frozenset[str]:
        if name not in ("train", "validation", "test"):
            raise ValueError(f"unknown split name: {name!r}")
        return getattr(self, name)
