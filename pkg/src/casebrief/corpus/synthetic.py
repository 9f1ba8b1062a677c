"""Synthetic brief generator for desk-scale experiments.

Real graded briefs are not redistributable, so end-to-end experiments
run on generated documents instead. Every section's sentences carry one
marker word from that section's private vocabulary plus neutral filler,
making the classes linearly separable at noise 0. The noise knob
replaces a sentence's marker with one drawn from a uniformly random
label's vocabulary (the gold label is unchanged), degrading separability
in a controlled way.
"""

from __future__ import annotations

import random

from casebrief.corpus.types import RawBrief
from casebrief.labels import LABEL_ORDER, SectionLabel

#: Private marker vocabulary per label; no word appears twice or in the
#: filler list, and none collides with the abbreviation or heading sets.
MARKERS: dict[SectionLabel, tuple[str, ...]] = {
    SectionLabel.FACTS: ("plaintiff", "defendant", "incident", "injury", "agreement", "property"),
    SectionLabel.ISSUE: ("whether", "question", "dispute", "contention", "ambiguity", "interpretation"),
    SectionLabel.HOLDING: ("affirmed", "reversed", "remanded", "granted", "denied", "vacated"),
    SectionLabel.PROCEDURAL_HISTORY: ("appealed", "filed", "motion", "petition", "docket", "complaint"),
    SectionLabel.REASONING: ("because", "therefore", "rationale", "persuasive", "weighing", "outweighs"),
    SectionLabel.RULE: ("statute", "doctrine", "precedent", "standard", "principle", "requirement"),
}

FILLERS: tuple[str, ...] = (
    "the", "court", "considered", "record", "parties", "during", "trial",
    "under", "state", "law", "this", "matter", "case", "presented",
    "evidence", "before", "judge", "noted", "that", "relevant", "briefing",
    "counsel", "argued", "review", "here", "against", "each", "side",
)

#: Heading spellings per label, all present in the normalization table.
HEADING_VARIANTS: dict[SectionLabel, tuple[str, ...]] = {
    SectionLabel.FACTS: ("Facts", "FACTS", "Statement of Facts"),
    SectionLabel.ISSUE: ("Issue", "Issues", "Legal Issue"),
    SectionLabel.HOLDING: ("Holding", "HOLDING", "Decision"),
    SectionLabel.PROCEDURAL_HISTORY: ("Procedural History", "Procedural Posture", "Procedure"),
    SectionLabel.REASONING: ("Reasoning", "Analysis", "Rationale"),
    SectionLabel.RULE: ("Rule", "Rule of Law", "Rules"),
}


def _make_sentence(label: SectionLabel, noise: float, rng: random.Random) -> str:
    marker_label = label
    if noise > 0 and rng.random() < noise:
        marker_label = rng.choice(LABEL_ORDER)
    marker = rng.choice(MARKERS[marker_label])
    words = [rng.choice(FILLERS) for _ in range(rng.randint(4, 9))]
    words.insert(rng.randint(0, len(words)), marker)
    words[0] = words[0][0].upper() + words[0][1:]
    return " ".join(words) + "."


def generate_corpus(n_docs: int = 600, seed: int = 0, noise: float = 0.0) -> list[RawBrief]:
    """Generate raw briefs with all six sections per document.

    Each section holds one or two sentences (two with probability 0.4),
    giving roughly 8.4 sentences per document. Deterministic for a
    fixed (n_docs, seed, noise).
    """
    if not 0.0 <= noise <= 1.0:
        raise ValueError(f"noise must be in [0, 1], got {noise!r}")
    rng = random.Random(seed)
    briefs: list[RawBrief] = []
    for i in range(n_docs):
        title = f"Synthetic Case {i:04d}"
        lines = [title, ""]
        for label in LABEL_ORDER:
            lines.append(rng.choice(HEADING_VARIANTS[label]))
            n_sents = 2 if rng.random() < 0.4 else 1
            lines.append(" ".join(_make_sentence(label, noise, rng) for _ in range(n_sents)))
            lines.append("")
        briefs.append(RawBrief(doc_id=f"syn-{i:04d}", title=title, body="\n".join(lines)))
    return briefs
