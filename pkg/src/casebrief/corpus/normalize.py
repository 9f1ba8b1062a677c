"""Heading normalization: raw heading text to canonical section label.

Real briefs spell the same section many ways ("Analysis", "Rationale",
"Reasoning"). The table below folds the common spellings onto the six
canonical labels; anything else stays unmapped (``None``) rather than
being guessed at.
"""

from __future__ import annotations

from casebrief.labels import SectionLabel

#: Surrounding characters ignored when looking a heading up.
_EDGE_PUNCT = " \t\r\n.,:;!?-–—_*"

#: Lookup key (lowercased, edges stripped) -> canonical label.
HEADING_TABLE: dict[str, SectionLabel] = {
    "facts": SectionLabel.FACTS,
    "fact": SectionLabel.FACTS,
    "statement of facts": SectionLabel.FACTS,
    "factual background": SectionLabel.FACTS,
    "background": SectionLabel.FACTS,
    "issue": SectionLabel.ISSUE,
    "issues": SectionLabel.ISSUE,
    "legal issue": SectionLabel.ISSUE,
    "legal issues": SectionLabel.ISSUE,
    "question presented": SectionLabel.ISSUE,
    "questions presented": SectionLabel.ISSUE,
    "holding": SectionLabel.HOLDING,
    "holdings": SectionLabel.HOLDING,
    "decision": SectionLabel.HOLDING,
    "disposition": SectionLabel.HOLDING,
    "conclusion": SectionLabel.HOLDING,
    "procedural history": SectionLabel.PROCEDURAL_HISTORY,
    "procedure": SectionLabel.PROCEDURAL_HISTORY,
    "procedural posture": SectionLabel.PROCEDURAL_HISTORY,
    "posture": SectionLabel.PROCEDURAL_HISTORY,
    "prior proceedings": SectionLabel.PROCEDURAL_HISTORY,
    "reasoning": SectionLabel.REASONING,
    "analysis": SectionLabel.REASONING,
    "rationale": SectionLabel.REASONING,
    "court's reasoning": SectionLabel.REASONING,
    "discussion": SectionLabel.REASONING,
    "rule": SectionLabel.RULE,
    "rules": SectionLabel.RULE,
    "rule of law": SectionLabel.RULE,
    "applicable law": SectionLabel.RULE,
    "legal rule": SectionLabel.RULE,
}


def normalize_section_name(heading_raw: str) -> SectionLabel | None:
    """Map a raw heading to its canonical label, or ``None`` if unmapped.

    Total function: lowercases, strips surrounding punctuation and
    whitespace, collapses internal runs of whitespace, then does an
    exact table lookup. ``"HOLDING:"``, ``" holding "`` and
    ``"Holding"`` all agree.
    """
    key = heading_raw.strip(_EDGE_PUNCT).lower()
    key = " ".join(key.split())
    return HEADING_TABLE.get(key)
