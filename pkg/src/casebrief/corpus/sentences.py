"""Rule-based sentence boundary detection for legal prose.

Legal text defeats naive period splitting: citations ("410 U.S. 113"),
party abbreviations ("Smith v. Jones"), and parenthetical references
are full of periods that end no sentence. The splitter below breaks on
a terminator only when the following context looks like a sentence
start, the preceding token is not a known abbreviation, and the
terminator is not inside a parenthetical.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

#: Terminator optionally followed by closing quotes; the break, if any,
#: lands after the whole run.
_TERMINATOR = re.compile(r"[.!?][\"'”’]*")

#: Characters that may open the token before an abbreviation, ignored
#: during lookup ("(Stat." still matches "Stat.").
_OPENERS = "([\"'“‘"

#: A break requires whitespace and then one of these: an uppercase
#: letter, a digit, or an opening quote.
_STARTERS = "\"'“‘"


def default_abbreviations_path() -> Path:
    """Path of the abbreviation file shipped with the package."""
    return Path(str(resources.files("casebrief").joinpath("data/abbreviations.txt")))


def load_abbreviations(path: str | Path | None = None) -> frozenset[str]:
    """Read the abbreviation list, one entry per line; ``#`` lines skipped."""
    source = Path(path) if path is not None else default_abbreviations_path()
    entries = set()
    for line in source.read_text(encoding="utf-8").splitlines():
        entry = line.strip()
        if entry and not entry.startswith("#"):
            entries.add(entry)
    return frozenset(entries)


_DEFAULT_ABBREVIATIONS: frozenset[str] | None = None


def _abbreviations() -> frozenset[str]:
    global _DEFAULT_ABBREVIATIONS
    if _DEFAULT_ABBREVIATIONS is None:
        _DEFAULT_ABBREVIATIONS = load_abbreviations()
    return _DEFAULT_ABBREVIATIONS


def _is_abbreviation(text: str, term_pos: int, abbreviations: frozenset[str]) -> bool:
    tok_start = term_pos
    while tok_start > 0 and not text[tok_start - 1].isspace():
        tok_start -= 1
    token = text[tok_start : term_pos + 1].lstrip(_OPENERS)
    return token in abbreviations or token[:-1] in abbreviations


def _starts_sentence(text: str, pos: int) -> bool:
    if pos >= len(text) or not text[pos].isspace():
        return False
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if pos >= len(text):
        return False
    ch = text[pos]
    return ch.isupper() or ch.isdigit() or ch in _STARTERS


def split_sentences(
    text: str, abbreviations: frozenset[str] | None = None
) -> list[tuple[int, int]]:
    """Split one section's text into sentence spans.

    Returns ``(start, end)`` offsets into ``text``, in order,
    non-overlapping, each trimmed to non-whitespace edges, together
    covering every non-whitespace character. Empty or all-whitespace
    input yields an empty list.
    """
    if abbreviations is None:
        abbreviations = _abbreviations()

    breaks: list[int] = []
    depth = 0
    scanned = 0
    for match in _TERMINATOR.finditer(text):
        term_pos = match.start()
        for ch in text[scanned:term_pos]:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth = max(0, depth - 1)
        scanned = term_pos
        if depth > 0:
            continue
        if text[term_pos] == "." and _is_abbreviation(text, term_pos, abbreviations):
            continue
        if _starts_sentence(text, match.end()):
            breaks.append(match.end())

    spans: list[tuple[int, int]] = []
    cursor = 0
    for stop in [*breaks, len(text)]:
        start, end = cursor, stop
        while start < end and text[start].isspace():
            start += 1
        while end > start and text[end - 1].isspace():
            end -= 1
        if start < end:
            spans.append((start, end))
        cursor = stop
    return spans
