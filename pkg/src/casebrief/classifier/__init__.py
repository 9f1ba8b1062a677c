"""Sentence classification over the six section labels."""

from casebrief.classifier.artifact import load_model, save_model, train
from casebrief.classifier.baseline import BaselineModel, sample_baseline, train_baseline
from casebrief.classifier.features import NgramVectorizer, ngrams, tokenize
from casebrief.classifier.linear import LinearModel, train_linear
from casebrief.classifier.types import (
    BACKENDS,
    BackendUnavailable,
    ClassifierError,
    EmptyText,
    EmptyTrainingSet,
    SentenceClassifier,
    TrainConfig,
    WrongBackend,
    argmax_label,
    best_epoch_index,
    training_fingerprint,
)

__all__ = [
    "BACKENDS",
    "BackendUnavailable",
    "BaselineModel",
    "ClassifierError",
    "EmptyText",
    "EmptyTrainingSet",
    "LinearModel",
    "NgramVectorizer",
    "SentenceClassifier",
    "TrainConfig",
    "WrongBackend",
    "argmax_label",
    "best_epoch_index",
    "load_model",
    "ngrams",
    "sample_baseline",
    "save_model",
    "tokenize",
    "train",
    "train_baseline",
    "train_linear",
    "training_fingerprint",
]
