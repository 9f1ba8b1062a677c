"""Line-delimited JSON corpus files and the ingest pipeline.

Two on-disk forms share one file layout (one JSON object per line,
UTF-8). Raw records carry {doc_id, title, body}; processed records add
the segmentation result: sections (heading, label, text, span) and the
sentence inventory, plus the document's split assignment so training
and evaluation agree on the partition without re-shuffling.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path

from casebrief.corpus.segment import ingest_brief
from casebrief.corpus.splits import make_splits
from casebrief.corpus.types import CaseBrief, BriefSection, DocSentence, NoSectionsFound, RawBrief, Sentence
from casebrief.labels import SectionLabel

logger = logging.getLogger(__name__)


def canonical_json(obj: object) -> str:
    """Serialize with sorted keys and no whitespace, for stable hashing."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


@dataclass(frozen=True)
class ProcessedCorpus:
    """Ingested documents plus their split assignment."""

    briefs: tuple[CaseBrief, ...]
    split_of: dict[str, str]

    def doc_ids(self, split: str | None = None) -> list[str]:
        if split is None:
            return [b.doc_id for b in self.briefs]
        if split not in ("train", "validation", "test"):
            raise ValueError(f"unknown split name: {split!r}")
        return [b.doc_id for b in self.briefs if self.split_of.get(b.doc_id) == split]

    def brief(self, doc_id: str) -> CaseBrief:
        for b in self.briefs:
            if b.doc_id == doc_id:
                return b
        raise KeyError(doc_id)

    def sentences(self, split: str | None = None) -> list[Sentence]:
        """Labeled dataset sentences, optionally restricted to one split."""
        wanted = set(self.doc_ids(split))
        out: list[Sentence] = []
        for b in self.briefs:
            if b.doc_id in wanted:
                out.extend(b.dataset_sentences())
        return out

    def fingerprint(self) -> str:
        """Content hash covering documents and split assignment."""
        digest = hashlib.sha256()
        for b in sorted(self.briefs, key=lambda x: x.doc_id):
            record = brief_to_record(b, self.split_of.get(b.doc_id, "train"))
            digest.update(canonical_json(record).encode("utf-8"))
            digest.update(b"\n")
        return digest.hexdigest()


def read_raw_corpus(path: str | Path) -> list[RawBrief]:
    """Read raw records {doc_id, title, body}, one per line."""
    out: list[RawBrief] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: not valid JSON: {exc}") from exc
            try:
                out.append(
                    RawBrief(
                        doc_id=str(record["doc_id"]),
                        title=str(record.get("title", "")),
                        body=str(record["body"]),
                    )
                )
            except KeyError as exc:
                raise ValueError(f"{path}:{lineno}: missing field {exc}") from exc
    return out


def write_raw_corpus(path: str | Path, briefs: list[RawBrief]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for b in briefs:
            fh.write(canonical_json({"doc_id": b.doc_id, "title": b.title, "body": b.body}))
            fh.write("\n")


def brief_to_record(brief: CaseBrief, split: str) -> dict:
    return {
        "doc_id": brief.doc_id,
        "title": brief.title,
        "body": brief.body,
        "split": split,
        "sections": [
            {
                "heading_raw": s.heading_raw,
                "label": s.label.value if s.label is not None else None,
                "text": s.text,
                "char_span": list(s.char_span),
            }
            for s in brief.sections
        ],
        "sentences": [
            {
                "sent_id": s.sent_id,
                "label": s.label.value if s.label is not None else None,
                "text": s.text,
                "char_span": list(s.char_span),
            }
            for s in brief.sentences
        ],
    }


def record_to_brief(record: dict) -> tuple[CaseBrief, str]:
    sections = tuple(
        BriefSection(
            heading_raw=s["heading_raw"],
            label=SectionLabel(s["label"]) if s.get("label") else None,
            text=s["text"],
            char_span=(s["char_span"][0], s["char_span"][1]),
        )
        for s in record["sections"]
    )
    sentences = tuple(
        DocSentence(
            sent_id=s["sent_id"],
            label=SectionLabel(s["label"]) if s.get("label") else None,
            text=s["text"],
            char_span=(s["char_span"][0], s["char_span"][1]),
        )
        for s in record["sentences"]
    )
    brief = CaseBrief(
        doc_id=record["doc_id"],
        title=record.get("title", ""),
        body=record["body"],
        sections=sections,
        sentences=sentences,
    )
    return brief, record.get("split", "train")


def write_processed_corpus(path: str | Path, corpus: ProcessedCorpus) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for b in corpus.briefs:
            fh.write(canonical_json(brief_to_record(b, corpus.split_of.get(b.doc_id, "train"))))
            fh.write("\n")


def read_processed_corpus(path: str | Path) -> ProcessedCorpus:
    briefs: list[CaseBrief] = []
    split_of: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: not valid JSON: {exc}") from exc
            brief, split = record_to_brief(record)
            briefs.append(brief)
            split_of[brief.doc_id] = split
    return ProcessedCorpus(briefs=tuple(briefs), split_of=split_of)


def ingest_corpus(
    raws: list[RawBrief],
    phrases: tuple[str, ...],
    seed: int = 0,
    ratios: tuple[float, float, float] = (0.70, 0.15, 0.15),
) -> ProcessedCorpus:
    """Segment every document and assign document-basis splits.

    Documents in which no heading matches are rejected and logged, per
    the segmentation contract; the split is computed over the survivors
    only.
    """
    briefs: list[CaseBrief] = []
    kept_raws: list[RawBrief] = []
    for raw in raws:
        try:
            briefs.append(ingest_brief(raw, phrases))
        except NoSectionsFound:
            logger.warning("rejected %s: no section headings found", raw.doc_id)
            continue
        kept_raws.append(raw)
    if not briefs:
        raise NoSectionsFound("every document was rejected: no section headings found")
    split = make_splits(kept_raws, seed=seed, ratios=ratios)
    return ProcessedCorpus(briefs=tuple(briefs), split_of=split.assignment())
