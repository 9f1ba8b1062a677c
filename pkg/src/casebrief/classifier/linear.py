"""Deterministic linear softmax classifier over bag-of-n-gram features.

The mandatory reference backend: mini-batch gradient descent with
per-coordinate adaptive steps (adagrad) from a zero initialization,
seeded shuffles, float64 arithmetic throughout. Given the same data,
config, and seed it reproduces bit-identical parameters, which the
artifact round-trip tests rely on.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy import sparse

from casebrief.classifier.features import NgramVectorizer
from casebrief.classifier.types import (
    EmptyTrainingSet,
    SentenceClassifier,
    TrainConfig,
    best_epoch_index,
    training_fingerprint,
)
from casebrief.corpus.types import Sentence
from casebrief.labels import LABEL_ORDER, NUM_LABELS, SectionLabel, label_index
from casebrief.metrics import weighted_f1

DEFAULTS = {
    "learning_rate": 1.0,
    "batch_size": 32,
    "l2": 1e-4,
    "ngram_range": (1, 2),
}


def _softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=-1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=-1, keepdims=True)


class LinearModel(SentenceClassifier):
    backend = "linear"

    def __init__(
        self,
        vectorizer: NgramVectorizer,
        weights: np.ndarray,
        bias: np.ndarray,
        fingerprint: str,
        epoch_scores: tuple[float | None, ...],
        best_epoch: int | None,
        config: dict | None = None,
    ) -> None:
        self.vectorizer = vectorizer
        self.weights = np.asarray(weights, dtype=np.float64)
        self.bias = np.asarray(bias, dtype=np.float64)
        if self.weights.shape != (NUM_LABELS, len(vectorizer)):
            raise ValueError(f"weight shape {self.weights.shape} does not match vocabulary")
        self.fingerprint = fingerprint
        self.epoch_scores = epoch_scores
        self.best_epoch = best_epoch
        self.config = config or {}

    def _logits(self, texts: Sequence[str]) -> np.ndarray:
        x = self.vectorizer.transform(texts)
        return x @ self.weights.T + self.bias

    def predict_proba(self, text: str) -> dict[SectionLabel, float]:
        self.require_text(text)
        probs = _softmax(self._logits([text])[0])
        return {label: float(probs[i]) for i, label in enumerate(LABEL_ORDER)}

    def predict_batch(self, texts: Sequence[str]) -> list[SectionLabel]:
        """Vectorized argmax; equivalent to predict() per text.

        np.argmax returns the first maximal index, which is exactly the
        canonical-order tie-break.
        """
        if not texts:
            return []
        indices = np.argmax(self._logits(texts), axis=1)
        return [LABEL_ORDER[i] for i in indices]

    def save(self, out_dir: str | Path) -> None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        manifest = {
            "backend": self.backend,
            "label_order": [label.value for label in LABEL_ORDER],
            "fingerprint": self.fingerprint,
            "epoch_scores": list(self.epoch_scores),
            "best_epoch": self.best_epoch,
            "config": self.config,
            "ngram_range": list(self.vectorizer.ngram_range),
            "vocab_size": len(self.vectorizer),
        }
        (out / "manifest.json").write_text(
            json.dumps(manifest, sort_keys=True, ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8",
        )
        (out / "vocab.json").write_text(
            json.dumps(list(self.vectorizer.vocabulary), ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        # plain .npy, not .npz: zip archives embed member timestamps and
        # would break byte-identical artifacts
        np.save(out / "weights.npy", self.weights)
        np.save(out / "bias.npy", self.bias)

    @classmethod
    def load(cls, model_dir: str | Path) -> "LinearModel":
        root = Path(model_dir)
        manifest = json.loads((root / "manifest.json").read_text(encoding="utf-8"))
        vocab = json.loads((root / "vocab.json").read_text(encoding="utf-8"))
        ngram_range = tuple(manifest.get("ngram_range", (1, 2)))
        return cls(
            vectorizer=NgramVectorizer(vocab, ngram_range=ngram_range),
            weights=np.load(root / "weights.npy"),
            bias=np.load(root / "bias.npy"),
            fingerprint=manifest["fingerprint"],
            epoch_scores=tuple(manifest["epoch_scores"]),
            best_epoch=manifest["best_epoch"],
            config=manifest.get("config", {}),
        )


def train_linear(
    train: Sequence[Sentence],
    validation: Sequence[Sentence],
    config: TrainConfig,
) -> LinearModel:
    """Mini-batch softmax regression with per-epoch checkpoint selection.

    Updates use adagrad: each coordinate is scaled by the inverse root
    of its accumulated squared gradient, so rarely-seen but decisive
    features (section-specific vocabulary) take full-size steps while
    frequent ambiguous ones are damped. After every epoch the parameters
    are snapshotted and scored by weighted F1 on the validation set; the
    earliest epoch attaining the maximum wins. With an empty validation
    set no selection is possible and the final epoch is kept (scores
    recorded as null).
    """
    if not train:
        raise EmptyTrainingSet("linear training requires at least one sentence")

    params = {**DEFAULTS, **config.backend_params}
    lr = float(params["learning_rate"])
    batch_size = int(params["batch_size"])
    l2 = float(params["l2"])
    ngram_range = (int(params["ngram_range"][0]), int(params["ngram_range"][1]))

    texts = [s.text for s in train]
    y = np.array([label_index(s.label) for s in train], dtype=np.int64)
    vectorizer = NgramVectorizer.fit(texts, ngram_range=ngram_range)
    x_all = vectorizer.transform(texts)
    n = x_all.shape[0]

    weights = np.zeros((NUM_LABELS, len(vectorizer)), dtype=np.float64)
    bias = np.zeros(NUM_LABELS, dtype=np.float64)
    accum_w = np.zeros_like(weights)
    accum_b = np.zeros_like(bias)
    eps = 1e-12
    rng = np.random.default_rng(config.seed)

    val_texts = [s.text for s in validation]
    val_gold = [s.label for s in validation]
    val_x = vectorizer.transform(val_texts) if validation else None

    snapshots: list[tuple[np.ndarray, np.ndarray]] = []
    scores: list[float | None] = []
    for _ in range(config.epochs):
        order = rng.permutation(n)
        for start in range(0, n, batch_size):
            batch = order[start : start + batch_size]
            xb = x_all[batch]
            logits = xb @ weights.T + bias
            probs = _softmax(logits)
            probs[np.arange(len(batch)), y[batch]] -= 1.0
            probs /= len(batch)
            grad_w = (xb.T @ probs).T + l2 * weights
            grad_b = probs.sum(axis=0)
            accum_w += grad_w**2
            accum_b += grad_b**2
            weights -= lr * grad_w / (np.sqrt(accum_w) + eps)
            bias -= lr * grad_b / (np.sqrt(accum_b) + eps)
        snapshots.append((weights.copy(), bias.copy()))
        if val_x is not None and len(val_gold) > 0:
            val_pred_idx = np.argmax(val_x @ weights.T + bias, axis=1)
            val_pred = [LABEL_ORDER[i] for i in val_pred_idx]
            scores.append(weighted_f1(val_gold, val_pred))
        else:
            scores.append(None)

    if scores and scores[0] is not None:
        best = best_epoch_index([float(s) for s in scores if s is not None])
    else:
        best = len(snapshots) - 1
    best_weights, best_bias = snapshots[best]

    return LinearModel(
        vectorizer=vectorizer,
        weights=best_weights,
        bias=best_bias,
        fingerprint=training_fingerprint(config, train, validation),
        epoch_scores=tuple(scores),
        best_epoch=best,
        config={
            "epochs": config.epochs,
            "seed": config.seed,
            "learning_rate": lr,
            "batch_size": batch_size,
            "l2": l2,
        },
    )
