"""Stratified random baseline: label frequencies are the whole model.

``predict_proba`` returns the training-set label distribution for every
input, so ``predict`` is the constant majority label. The random
behavior the evaluation harness needs (sampling labels in proportion to
their frequency) lives in ``sample_baseline`` and is driven by a seeded
generator owned by the caller.
"""

from __future__ import annotations

import json
from collections import Counter
from pathlib import Path
from typing import Sequence

import numpy as np

from casebrief.classifier.types import (
    EmptyTrainingSet,
    SentenceClassifier,
    TrainConfig,
    WrongBackend,
    training_fingerprint,
)
from casebrief.corpus.types import Sentence
from casebrief.labels import LABEL_ORDER, SectionLabel


class BaselineModel(SentenceClassifier):
    backend = "baseline"

    def __init__(self, frequencies: np.ndarray, fingerprint: str) -> None:
        frequencies = np.asarray(frequencies, dtype=np.float64)
        if frequencies.shape != (len(LABEL_ORDER),):
            raise ValueError(f"expected {len(LABEL_ORDER)} frequencies, got {frequencies.shape}")
        if abs(float(frequencies.sum()) - 1.0) > 1e-9 or (frequencies < 0).any():
            raise ValueError("frequencies must be a probability vector")
        self.frequencies = frequencies
        self.fingerprint = fingerprint
        self.epoch_scores: tuple[float | None, ...] = ()
        self.best_epoch: int | None = None

    def predict_proba(self, text: str) -> dict[SectionLabel, float]:
        self.require_text(text)
        return {label: float(self.frequencies[i]) for i, label in enumerate(LABEL_ORDER)}

    def save(self, out_dir: str | Path) -> None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        manifest = {
            "backend": self.backend,
            "label_order": [label.value for label in LABEL_ORDER],
            "fingerprint": self.fingerprint,
            "epoch_scores": [],
            "best_epoch": None,
            "frequencies": [float(f) for f in self.frequencies],
        }
        (out / "manifest.json").write_text(
            json.dumps(manifest, sort_keys=True, ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8",
        )

    @classmethod
    def load(cls, model_dir: str | Path) -> "BaselineModel":
        manifest = json.loads(
            (Path(model_dir) / "manifest.json").read_text(encoding="utf-8")
        )
        return cls(
            frequencies=np.array(manifest["frequencies"], dtype=np.float64),
            fingerprint=manifest["fingerprint"],
        )


def train_baseline(
    train: Sequence[Sentence],
    validation: Sequence[Sentence],
    config: TrainConfig,
) -> BaselineModel:
    """Record train-label frequencies; epochs and validation are ignored."""
    if not train:
        raise EmptyTrainingSet("baseline training requires at least one sentence")
    counts = Counter(s.label for s in train)
    frequencies = np.array(
        [counts.get(label, 0) for label in LABEL_ORDER], dtype=np.float64
    )
    frequencies /= frequencies.sum()
    return BaselineModel(
        frequencies=frequencies,
        fingerprint=training_fingerprint(config, train, validation),
    )


def sample_baseline(
    model: SentenceClassifier, rng: int | np.random.Generator
) -> SectionLabel:
    """Draw one label in proportion to the stored train frequencies.

    Accepts either a seed (one-shot, reproducible draw) or a live
    generator so callers can draw a sequence. Only meaningful for the
    baseline backend; anything else raises ``WrongBackend``.
    """
    if not isinstance(model, BaselineModel):
        raise WrongBackend(f"sample_baseline needs the baseline backend, got {model.backend!r}")
    generator = np.random.default_rng(rng) if isinstance(rng, int) else rng
    index = int(generator.choice(len(LABEL_ORDER), p=model.frequencies))
    return LABEL_ORDER[index]
