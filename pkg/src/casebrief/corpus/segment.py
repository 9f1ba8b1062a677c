"""Heading-driven segmentation of raw brief bodies.

A heading is a line consisting of nothing but a known heading phrase,
optionally followed by a colon. The phrase inventory lives in a plain
text file so the set of recognized headings can be audited and extended
without touching code. Phrases the normalization table does not know
still delimit sections; those sections simply carry no label.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from casebrief.corpus.normalize import normalize_section_name
from casebrief.corpus.sentences import split_sentences
from casebrief.corpus.types import BriefSection, CaseBrief, DocSentence, NoSectionsFound, RawBrief


def default_patterns_path() -> Path:
    """Path of the heading phrase file shipped with the package."""
    return Path(str(resources.files("casebrief").joinpath("data/heading_patterns.txt")))


def load_heading_patterns(path: str | Path | None = None) -> tuple[str, ...]:
    """Read heading phrases, one per line; ``#`` lines and blanks skipped."""
    source = Path(path) if path is not None else default_patterns_path()
    phrases: list[str] = []
    for line in source.read_text(encoding="utf-8").splitlines():
        phrase = line.strip()
        if not phrase or phrase.startswith("#"):
            continue
        phrases.append(phrase)
    if not phrases:
        raise ValueError(f"no heading phrases in {source}")
    return tuple(phrases)


def compile_heading_pattern(phrases: tuple[str, ...]) -> re.Pattern[str]:
    """Build the line-anchored, case-insensitive heading matcher.

    Longer phrases are tried first so "Procedural History" wins over a
    hypothetical shorter prefix. The colon is optional; nothing else may
    share the line.
    """
    ordered = sorted(phrases, key=len, reverse=True)
    body = "|".join(re.escape(p) for p in ordered)
    return re.compile(rf"^[ \t]*({body})[ \t]*:?[ \t]*$", re.IGNORECASE | re.MULTILINE)


def _trim_span(body: str, start: int, end: int) -> tuple[int, int]:
    while start < end and body[start].isspace():
        start += 1
    while end > start and body[end - 1].isspace():
        end -= 1
    return start, end


def segment_brief(raw: RawBrief, phrases: tuple[str, ...]) -> list[BriefSection]:
    """Cut a body into heading-delimited sections, in document order.

    Text before the first heading (case caption, citation line) belongs
    to no section and is discarded. Raises ``NoSectionsFound`` when not
    a single heading line matches, so callers can reject the document.
    """
    pattern = compile_heading_pattern(phrases)
    matches = list(pattern.finditer(raw.body))
    if not matches:
        raise NoSectionsFound(f"no section headings found in {raw.doc_id!r}")

    sections: list[BriefSection] = []
    for i, match in enumerate(matches):
        text_start = match.end()
        if raw.body[text_start : text_start + 1] == "\n":
            text_start += 1
        text_end = matches[i + 1].start() if i + 1 < len(matches) else len(raw.body)
        text_start, text_end = _trim_span(raw.body, text_start, text_end)
        heading_raw = match.group(1)
        sections.append(
            BriefSection(
                heading_raw=heading_raw,
                label=normalize_section_name(heading_raw),
                text=raw.body[text_start:text_end],
                char_span=(text_start, text_end),
            )
        )
    return sections


def ingest_brief(raw: RawBrief, phrases: tuple[str, ...]) -> CaseBrief:
    """Segment a raw brief and build its sentence inventory.

    Sentence ids number sentences in reading order across the whole
    document; spans are absolute body offsets.
    """
    sections = segment_brief(raw, phrases)
    sentences: list[DocSentence] = []
    for section in sections:
        for rel_start, rel_end in split_sentences(section.text):
            start = section.char_span[0] + rel_start
            end = section.char_span[0] + rel_end
            sentences.append(
                DocSentence(
                    sent_id=f"{raw.doc_id}:{len(sentences):04d}",
                    label=section.label,
                    text=raw.body[start:end],
                    char_span=(start, end),
                )
            )

    return CaseBrief(
        doc_id=raw.doc_id,
        title=raw.title,
        body=raw.body,
        sections=tuple(sections),
        sentences=tuple(sentences),
    )
