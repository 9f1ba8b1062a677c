"""Backend dispatch: train by config, save and load by manifest.

A model artifact is a directory holding a ``manifest.json`` (backend
id, label order, fingerprint, per-epoch validation scores) next to the
backend's parameter blobs. Loading reads the manifest's backend field
and hands off to that backend's loader; for the baseline and linear
backends the round trip reproduces bit-identical predictions.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from casebrief.classifier.baseline import BaselineModel, train_baseline
from casebrief.classifier.linear import LinearModel, train_linear
from casebrief.classifier.types import SentenceClassifier, TrainConfig
from casebrief.corpus.types import Sentence


def train(
    train_set: Sequence[Sentence],
    validation: Sequence[Sentence],
    config: TrainConfig,
) -> SentenceClassifier:
    """Train the configured backend.

    Raises ``BackendUnavailable`` for the transformer backend when the
    optional stack is missing; callers decide whether to fall back.
    """
    if config.backend == "baseline":
        return train_baseline(train_set, validation, config)
    if config.backend == "linear":
        return train_linear(train_set, validation, config)
    from casebrief.classifier.transformer import train_transformer

    return train_transformer(train_set, validation, config)


def save_model(model: SentenceClassifier, out_dir: str | Path) -> None:
    model.save(out_dir)


def load_model(model_dir: str | Path) -> SentenceClassifier:
    manifest_path = Path(model_dir) / "manifest.json"
    if not manifest_path.is_file():
        raise FileNotFoundError(f"no model manifest at {manifest_path}")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    backend = manifest.get("backend")
    if backend == "baseline":
        return BaselineModel.load(model_dir)
    if backend == "linear":
        return LinearModel.load(model_dir)
    if backend == "transformer":
        from casebrief.classifier.transformer import TransformerModel

        return TransformerModel.load(model_dir)
    raise ValueError(f"manifest names unknown backend {backend!r}")
