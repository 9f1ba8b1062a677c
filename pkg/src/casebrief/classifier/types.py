"""Shared classifier contracts: config, errors, and the backend interface.

All three backends (stratified baseline, linear n-gram softmax,
transformer fine-tuning) present the same read API: ``predict_proba``
returns a full distribution over the six labels and ``predict`` its
argmax with ties broken by canonical label order. Loaded models are
immutable, so prediction is safe under concurrency.
"""

from __future__ import annotations

import abc
import hashlib
from dataclasses import dataclass, field
from typing import Sequence

from casebrief.corpus.types import Sentence
from casebrief.labels import LABEL_ORDER, SectionLabel

BACKENDS = ("baseline", "linear", "transformer")


class ClassifierError(Exception):
    """Base class for classifier errors."""


class EmptyTrainingSet(ClassifierError):
    """Training requires at least one labeled sentence."""


class EmptyText(ClassifierError):
    """Prediction requires non-empty input text."""


class WrongBackend(ClassifierError):
    """Operation applies to a different backend than the model's."""


class BackendUnavailable(ClassifierError):
    """The optional transformer stack is not installed."""


@dataclass(frozen=True)
class TrainConfig:
    """Training-run parameters; unset backend_params use backend defaults."""

    backend: str = "linear"
    epochs: int = 4
    seed: int = 0
    backend_params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}; expected one of {BACKENDS}")
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs}")
        if self.backend == "transformer":
            max_tokens = self.backend_params.get("max_tokens", 512)
            if max_tokens > 512:
                raise ValueError(f"transformer max_tokens must be <= 512, got {max_tokens}")

    def to_dict(self) -> dict:
        return {
            "backend": self.backend,
            "epochs": self.epochs,
            "seed": self.seed,
            "backend_params": dict(self.backend_params),
        }


def data_digest(sentences: Sequence[Sentence]) -> str:
    """Order-sensitive content hash of a sentence list."""
    digest = hashlib.sha256()
    for s in sentences:
        digest.update(f"{s.sent_id}\t{s.label.value}\t{s.text}\n".encode("utf-8"))
    return digest.hexdigest()


def training_fingerprint(
    config: TrainConfig, train: Sequence[Sentence], validation: Sequence[Sentence]
) -> str:
    """Hash of config plus training data, stamped into the artifact."""
    digest = hashlib.sha256()
    digest.update(repr(sorted(config.to_dict().items(), key=str)).encode("utf-8"))
    digest.update(data_digest(train).encode("utf-8"))
    digest.update(data_digest(validation).encode("utf-8"))
    return digest.hexdigest()


def argmax_label(probs: dict[SectionLabel, float]) -> SectionLabel:
    """Highest-probability label; exact ties go to the earliest in canonical order."""
    best_label = LABEL_ORDER[0]
    best_prob = probs[best_label]
    for label in LABEL_ORDER[1:]:
        if probs[label] > best_prob:
            best_label, best_prob = label, probs[label]
    return best_label


def best_epoch_index(scores: Sequence[float]) -> int:
    """Index of the highest score; ties resolve to the earliest epoch."""
    if not scores:
        raise ValueError("no epoch scores to select from")
    best = 0
    for i, score in enumerate(scores):
        if score > scores[best]:
            best = i
    return best


class SentenceClassifier(abc.ABC):
    """Read interface shared by all backends."""

    backend: str
    fingerprint: str
    epoch_scores: tuple[float | None, ...]
    best_epoch: int | None

    @abc.abstractmethod
    def predict_proba(self, text: str) -> dict[SectionLabel, float]:
        """Distribution over all six labels; non-negative, sums to 1."""

    def predict(self, text: str) -> SectionLabel:
        """Argmax of ``predict_proba`` with canonical-order tie-break."""
        return argmax_label(self.predict_proba(text))

    @staticmethod
    def require_text(text: str) -> str:
        if not text or not text.strip():
            raise EmptyText("prediction requires non-empty text")
        return text
