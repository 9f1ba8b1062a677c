"""Bag-of-n-grams features for the linear backend.

Word unigrams and bigrams, sublinear term counts (1 + ln tf), L2 row
normalization. The vocabulary is sorted, so feature indices are a pure
function of the training texts; that property carries the whole
bit-identical-serialization guarantee of the linear backend.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse

_TOKEN = re.compile(r"[a-z0-9§']+")


def tokenize(text: str) -> list[str]:
    return _TOKEN.findall(text.lower())


def ngrams(tokens: list[str], ngram_range: tuple[int, int]) -> Iterable[str]:
    lo, hi = ngram_range
    for n in range(lo, hi + 1):
        for i in range(len(tokens) - n + 1):
            yield " ".join(tokens[i : i + n])


class NgramVectorizer:
    """Map texts to L2-normalized sublinear-count rows."""

    def __init__(self, vocabulary: Sequence[str], ngram_range: tuple[int, int] = (1, 2)) -> None:
        self.vocabulary = tuple(vocabulary)
        self.ngram_range = (int(ngram_range[0]), int(ngram_range[1]))
        self._index = {gram: i for i, gram in enumerate(self.vocabulary)}

    @classmethod
    def fit(cls, texts: Sequence[str], ngram_range: tuple[int, int] = (1, 2)) -> "NgramVectorizer":
        seen = set()
        for text in texts:
            seen.update(ngrams(tokenize(text), ngram_range))
        return cls(vocabulary=sorted(seen), ngram_range=ngram_range)

    def __len__(self) -> int:
        return len(self.vocabulary)

    def transform(self, texts: Sequence[str]) -> sparse.csr_matrix:
        """Rows of 1 + ln(tf) weights, L2-normalized; unknown grams dropped."""
        data: list[float] = []
        indices: list[int] = []
        indptr = [0]
        for text in texts:
            counts = Counter(
                self._index[g]
                for g in ngrams(tokenize(text), self.ngram_range)
                if g in self._index
            )
            row = sorted(counts.items())
            weights = [1.0 + math.log(c) for _, c in row]
            norm = math.sqrt(sum(w * w for w in weights))
            if norm > 0:
                weights = [w / norm for w in weights]
            indices.extend(i for i, _ in row)
            data.extend(weights)
            indptr.append(len(indices))
        return sparse.csr_matrix(
            (np.asarray(data, dtype=np.float64), np.asarray(indices, dtype=np.int32), np.asarray(indptr, dtype=np.int32)),
            shape=(len(texts), len(self.vocabulary)),
        )
