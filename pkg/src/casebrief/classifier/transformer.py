"""Optional fine-tuning adapter for pre-trained transformer encoders.

The heavy stack (torch, transformers) is imported lazily so the rest of
the package works without it; any attempt to train or load this backend
without the stack raises ``BackendUnavailable``, which callers treat as
a signal to fall back to the linear backend. Inputs are truncated from
the tail to the configured token budget (hard cap 512).

No determinism guarantee: unlike the linear backend, fine-tuning is
only reproducible up to the underlying library's kernels.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

import numpy as np

from casebrief.classifier.types import (
    BackendUnavailable,
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
    "model_name": "roberta-base",
    "max_tokens": 512,
    "learning_rate": 2e-5,
    "batch_size": 8,
}


def _import_stack():
    try:
        import torch
        from transformers import AutoModelForSequenceClassification, AutoTokenizer
    except ImportError as exc:
        raise BackendUnavailable(
            "transformer backend needs the optional torch/transformers stack"
        ) from exc
    return torch, AutoModelForSequenceClassification, AutoTokenizer


def transformer_available() -> bool:
    try:
        _import_stack()
    except BackendUnavailable:
        return False
    return True


class TransformerModel(SentenceClassifier):
    backend = "transformer"

    def __init__(
        self,
        torch_module,
        model,
        tokenizer,
        max_tokens: int,
        fingerprint: str,
        epoch_scores: tuple[float | None, ...],
        best_epoch: int | None,
        config: dict | None = None,
    ) -> None:
        self._torch = torch_module
        self.model = model.eval()
        self.tokenizer = tokenizer
        self.max_tokens = max_tokens
        self.fingerprint = fingerprint
        self.epoch_scores = epoch_scores
        self.best_epoch = best_epoch
        self.config = config or {}

    def _logits(self, texts: Sequence[str]) -> np.ndarray:
        encoded = self.tokenizer(
            list(texts),
            truncation=True,
            max_length=self.max_tokens,
            padding=True,
            return_tensors="pt",
        )
        with self._torch.no_grad():
            logits = self.model(**encoded).logits
        return logits.detach().cpu().numpy()

    def predict_proba(self, text: str) -> dict[SectionLabel, float]:
        self.require_text(text)
        logits = self._logits([text])[0].astype(np.float64)
        shifted = logits - logits.max()
        exp = np.exp(shifted)
        probs = exp / exp.sum()
        return {label: float(probs[i]) for i, label in enumerate(LABEL_ORDER)}

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
            "max_tokens": self.max_tokens,
        }
        (out / "manifest.json").write_text(
            json.dumps(manifest, sort_keys=True, ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8",
        )
        self.model.save_pretrained(out / "hf")
        self.tokenizer.save_pretrained(out / "hf")

    @classmethod
    def load(cls, model_dir: str | Path) -> "TransformerModel":
        torch, auto_model, auto_tokenizer = _import_stack()
        root = Path(model_dir)
        manifest = json.loads((root / "manifest.json").read_text(encoding="utf-8"))
        model = auto_model.from_pretrained(root / "hf")
        tokenizer = auto_tokenizer.from_pretrained(root / "hf")
        return cls(
            torch_module=torch,
            model=model,
            tokenizer=tokenizer,
            max_tokens=int(manifest.get("max_tokens", 512)),
            fingerprint=manifest["fingerprint"],
            epoch_scores=tuple(manifest["epoch_scores"]),
            best_epoch=manifest["best_epoch"],
            config=manifest.get("config", {}),
        )


def train_transformer(
    train: Sequence[Sentence],
    validation: Sequence[Sentence],
    config: TrainConfig,
) -> TransformerModel:
    """Fine-tune with per-epoch validation and epoch-best selection."""
    torch, auto_model, auto_tokenizer = _import_stack()
    if not train:
        raise EmptyTrainingSet("transformer training requires at least one sentence")

    params = {**DEFAULTS, **config.backend_params}
    model_name = str(params["model_name"])
    max_tokens = int(params["max_tokens"])
    lr = float(params["learning_rate"])
    batch_size = int(params["batch_size"])

    torch.manual_seed(config.seed)
    tokenizer = auto_tokenizer.from_pretrained(model_name)
    model = auto_model.from_pretrained(model_name, num_labels=NUM_LABELS)
    optimizer = torch.optim.AdamW(model.parameters(), lr=lr)

    texts = [s.text for s in train]
    y = torch.tensor([label_index(s.label) for s in train], dtype=torch.long)
    val_texts = [s.text for s in validation]
    val_gold = [s.label for s in validation]

    def validate() -> float | None:
        if not val_texts:
            return None
        model.eval()
        preds: list[SectionLabel] = []
        with torch.no_grad():
            for start in range(0, len(val_texts), batch_size):
                chunk = val_texts[start : start + batch_size]
                encoded = tokenizer(
                    chunk, truncation=True, max_length=max_tokens, padding=True, return_tensors="pt"
                )
                logits = model(**encoded).logits.detach().cpu().numpy()
                preds.extend(LABEL_ORDER[i] for i in np.argmax(logits, axis=1))
        return weighted_f1(val_gold, preds)

    snapshots: list[dict] = []
    scores: list[float | None] = []
    for _ in range(config.epochs):
        model.train()
        order = torch.randperm(len(texts))
        for start in range(0, len(texts), batch_size):
            batch_idx = order[start : start + batch_size]
            chunk = [texts[i] for i in batch_idx.tolist()]
            encoded = tokenizer(
                chunk, truncation=True, max_length=max_tokens, padding=True, return_tensors="pt"
            )
            logits = model(**encoded).logits
            loss = torch.nn.functional.cross_entropy(logits, y[batch_idx])
            optimizer.zero_grad()
            loss.backward()
            optimizer.step()
        snapshots.append({k: v.detach().clone() for k, v in model.state_dict().items()})
        scores.append(validate())

    if scores and scores[0] is not None:
        best = best_epoch_index([float(s) for s in scores if s is not None])
    else:
        best = len(snapshots) - 1
    model.load_state_dict(snapshots[best])

    return TransformerModel(
        torch_module=torch,
        model=model,
        tokenizer=tokenizer,
        max_tokens=max_tokens,
        fingerprint=training_fingerprint(config, train, validation),
        epoch_scores=tuple(scores),
        best_epoch=best,
        config={
            "epochs": config.epochs,
            "seed": config.seed,
            "model_name": model_name,
            "learning_rate": lr,
            "batch_size": batch_size,
        },
    )
