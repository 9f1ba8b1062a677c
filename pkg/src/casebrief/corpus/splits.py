"""Document-basis dataset splitting and label counting."""

from __future__ import annotations

from collections import Counter

import numpy as np

from casebrief.corpus.types import DatasetSplit, InvalidRatios, RawBrief, Sentence
from casebrief.labels import LABEL_ORDER, SectionLabel


def make_splits(
    corpus: list[RawBrief],
    seed: int,
    ratios: tuple[float, float, float] = (0.70, 0.15, 0.15),
) -> DatasetSplit:
    """Partition documents into train/validation/test.

    Pure function of the doc_id multiset, the seed, and the ratios:
    ids are sorted before the seeded shuffle so input order cannot leak
    into the result. Allocation is floor(n * r_train) to train, then
    floor(n * r_val) to validation, remainder to test. Corpora with
    fewer than three documents go entirely to train, since the floor
    rule would otherwise starve train of its only document.
    """
    if len(ratios) != 3 or any(r < 0 for r in ratios):
        raise InvalidRatios(f"ratios must be three non-negative numbers, got {ratios!r}")
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise InvalidRatios(f"ratios must sum to 1.0, got {sum(ratios)!r}")
    if not corpus:
        raise InvalidRatios("corpus is empty")

    doc_ids = sorted(brief.doc_id for brief in corpus)
    if len(set(doc_ids)) != len(doc_ids):
        dupes = sorted({d for d in doc_ids if doc_ids.count(d) > 1})
        raise ValueError(f"duplicate doc_ids: {dupes}")

    norm_ratios = (float(ratios[0]), float(ratios[1]), float(ratios[2]))
    n = len(doc_ids)
    if n < 3:
        return DatasetSplit(
            train=frozenset(doc_ids),
            validation=frozenset(),
            test=frozenset(),
            seed=seed,
            ratios=norm_ratios,
        )

    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    shuffled = [doc_ids[i] for i in order]

    n_train = int(n * norm_ratios[0])
    n_val = int(n * norm_ratios[1])
    return DatasetSplit(
        train=frozenset(shuffled[:n_train]),
        validation=frozenset(shuffled[n_train : n_train + n_val]),
        test=frozenset(shuffled[n_train + n_val :]),
        seed=seed,
        ratios=norm_ratios,
    )


def label_distribution(sentences: list[Sentence]) -> dict[SectionLabel, int]:
    """Count sentences per label; every label appears, absent ones as 0."""
    counts = Counter(s.label for s in sentences)
    return {label: counts.get(label, 0) for label in LABEL_ORDER}
