"""Stratified baseline: frequency bookkeeping and seeded sampling."""

import numpy as np
import pytest

from casebrief.classifier.baseline import BaselineModel, sample_baseline, train_baseline
from casebrief.classifier.types import EmptyText, EmptyTrainingSet, TrainConfig, WrongBackend
from casebrief.labels import LABEL_ORDER, SectionLabel

from conftest import TableModel, assert_distribution, make_sentence

CONFIG = TrainConfig(backend="baseline", epochs=1, seed=0)


def skewed_train():
    sentences = []
    plan = [
        (SectionLabel.FACTS, 6),
        (SectionLabel.ISSUE, 2),
        (SectionLabel.HOLDING, 1),
        (SectionLabel.PROCEDURAL_HISTORY, 1),
        (SectionLabel.REASONING, 1),
        (SectionLabel.RULE, 1),
    ]
    for label, count in plan:
        for _ in range(count):
            sentences.append(make_sentence(len(sentences), label))
    return sentences


def test_frequencies_match_training_counts():
    model = train_baseline(skewed_train(), [], CONFIG)
    expected = np.array([6, 2, 1, 1, 1, 1], dtype=float) / 12
    np.testing.assert_allclose(model.frequencies, expected)

    probs = model.predict_proba("anything at all")
    assert_distribution(probs)
    assert probs[SectionLabel.FACTS] == pytest.approx(0.5)
    assert probs[SectionLabel.ISSUE] == pytest.approx(1 / 6)


def test_same_distribution_for_every_text():
    model = train_baseline(skewed_train(), [], CONFIG)
    assert model.predict_proba("alpha") == model.predict_proba("totally different")
    # constant argmax: the majority label
    assert model.predict("anything") is SectionLabel.FACTS


def test_missing_labels_get_zero_frequency():
    train = [make_sentence(i, SectionLabel.RULE) for i in range(4)]
    model = train_baseline(train, [], CONFIG)
    assert model.predict_proba("x")[SectionLabel.FACTS] == 0.0
    assert model.predict_proba("x")[SectionLabel.RULE] == 1.0


def test_empty_training_set_rejected():
    with pytest.raises(EmptyTrainingSet):
        train_baseline([], [], CONFIG)


def test_empty_text_rejected():
    model = train_baseline(skewed_train(), [], CONFIG)
    with pytest.raises(EmptyText):
        model.predict_proba("   ")


def test_sampling_with_int_seed_is_reproducible():
    model = train_baseline(skewed_train(), [], CONFIG)
    assert sample_baseline(model, 42) is sample_baseline(model, 42)


def test_sampling_with_generator_draws_a_sequence():
    model = train_baseline(skewed_train(), [], CONFIG)
    a = [sample_baseline(model, np.random.default_rng(7)) for _ in range(5)]
    assert len(set(a)) == 1  # fresh generator each call: same draw

    rng = np.random.default_rng(7)
    b = [sample_baseline(model, rng) for _ in range(50)]
    assert len(set(b)) > 1  # shared generator: the stream advances

    rng2 = np.random.default_rng(7)
    assert b == [sample_baseline(model, rng2) for _ in range(50)]


def test_sampling_tracks_frequencies():
    uniform = BaselineModel(np.full(6, 1 / 6), fingerprint="f")
    rng = np.random.default_rng(123)
    counts = {label: 0 for label in LABEL_ORDER}
    n = 60_000
    for _ in range(n):
        counts[sample_baseline(uniform, rng)] += 1
    expected = n / 6
    sigma = (n * (1 / 6) * (5 / 6)) ** 0.5
    for label, count in counts.items():
        assert abs(count - expected) < 3 * sigma, f"{label}: {count}"


def test_sampling_requires_baseline_backend():
    with pytest.raises(WrongBackend):
        sample_baseline(TableModel(), 0)


def test_frequency_vector_validated():
    with pytest.raises(ValueError):
        BaselineModel(np.array([0.5, 0.5]), fingerprint="f")
    with pytest.raises(ValueError):
        BaselineModel(np.array([0.9, 0.2, 0.0, 0.0, 0.0, -0.1]), fingerprint="f")
    with pytest.raises(ValueError):
        BaselineModel(np.full(6, 0.2), fingerprint="f")  # sums to 1.2


def test_save_load_round_trip(tmp_path):
    model = train_baseline(skewed_train(), [], CONFIG)
    model.save(tmp_path / "m")
    loaded = BaselineModel.load(tmp_path / "m")
    np.testing.assert_array_equal(loaded.frequencies, model.frequencies)
    assert loaded.fingerprint == model.fingerprint
    assert loaded.predict_proba("x") == model.predict_proba("x")


def test_fingerprint_covers_config_and_data():
    train = skewed_train()
    base = train_baseline(train, [], CONFIG).fingerprint
    other_seed = train_baseline(train, [], TrainConfig(backend="baseline", epochs=1, seed=9))
    assert other_seed.fingerprint != base
    shorter = train_baseline(train[:-1], [], CONFIG)
    assert shorter.fingerprint != base
