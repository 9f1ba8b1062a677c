"""Report assembly, text rendering, comparisons, and run records."""

import json

import numpy as np
import pytest

from casebrief.classifier.baseline import train_baseline
from casebrief.classifier.types import TrainConfig
from casebrief.corpus.io import ingest_corpus
from casebrief.corpus.synthetic import generate_corpus
from casebrief.evaluation.records import run_evaluation
from casebrief.evaluation.report import (
    FingerprintMismatch,
    classification_report,
    compare_models,
    warning_report,
)
from casebrief.labels import LABEL_ORDER, SectionLabel
from casebrief.metrics import evaluate_predictions
from casebrief.warnings import SWEEP_TAUS, EmptyTestSet, InvalidThreshold, sweep_pairs
from conftest import TableModel, label_probs, make_sentence


@pytest.fixture
def test_set():
    plan = [
        SectionLabel.FACTS,
        SectionLabel.FACTS,
        SectionLabel.ISSUE,
        SectionLabel.HOLDING,
        SectionLabel.REASONING,
        SectionLabel.RULE,
    ]
    return [make_sentence(i, label, text=f"test sentence {i}") for i, label in enumerate(plan)]


@pytest.fixture
def table_model(test_set):
    # deterministic per-text distributions: argmax matches gold except #1
    table = {
        test_set[0].text: label_probs(facts=0.9),
        test_set[1].text: label_probs(issue=0.8, facts=0.03),
        test_set[2].text: label_probs(issue=0.7),
        test_set[3].text: label_probs(holding=0.95),
        test_set[4].text: label_probs(reasoning=0.6),
        test_set[5].text: label_probs(rule=0.85),
    }
    return TableModel(table, fingerprint="table-eval")


def test_classification_report_matches_direct_computation(table_model, test_set):
    report = classification_report(table_model, test_set)
    gold = [s.label for s in test_set]
    predicted = [table_model.predict(s.text) for s in test_set]
    matrix, summary = evaluate_predictions(gold, predicted)

    assert report.backend == "table"
    assert report.model_fingerprint == "table-eval"
    assert report.n_sentences == 6
    assert report.matrix == tuple(tuple(int(c) for c in row) for row in matrix)
    assert report.summary == summary
    assert report.baseline_seed is None  # not the baseline backend

    record = report.to_dict()
    assert record["confusion_matrix"]["orientation"] == "rows=predicted, columns=gold"
    assert record["confusion_matrix"]["labels"] == [l.value for l in LABEL_ORDER]
    assert record["weighted"]["f1"] == pytest.approx(summary.weighted_f1)
    assert record["per_class"]["Facts"]["support"] == 2
    json.dumps(record)  # must be JSON-serializable as-is


def test_classification_report_requires_test_data(table_model):
    with pytest.raises(EmptyTestSet):
        classification_report(table_model, [])


def test_baseline_rows_are_seeded_draws(test_set):
    train = [make_sentence(100 + i, SectionLabel.FACTS) for i in range(3)] + [
        make_sentence(200 + i, SectionLabel.RULE) for i in range(3)
    ]
    config = TrainConfig(backend="baseline", epochs=1, seed=0)
    model = train_baseline(train, [], config)

    a = classification_report(model, test_set, baseline_seed=7)
    b = classification_report(model, test_set, baseline_seed=7)
    assert a.matrix == b.matrix  # same seed, same draws
    assert a.baseline_seed == 7

    c = classification_report(model, test_set, baseline_seed=8)
    assert a.matrix != c.matrix or a.summary != c.summary

    # draws replicate sample_baseline with the same generator
    from casebrief.classifier.baseline import sample_baseline

    rng = np.random.default_rng(7)
    expected = [sample_baseline(model, rng) for _ in test_set]
    gold = [s.label for s in test_set]
    matrix, _ = evaluate_predictions(gold, expected)
    assert a.matrix == tuple(tuple(int(x) for x in row) for row in matrix)


def test_render_text_flags_undefined_metrics(table_model, test_set):
    report = classification_report(table_model, test_set)
    text = report.render_text()
    assert "Label" in text and "Weighted avg" in text
    assert "Confusion matrix (rows: predicted, columns: gold)" in text
    # Procedural History never appears in this test set: undefined marker
    assert "* zero-denominator metrics reported as 0" in text
    assert text.endswith("\n")


def test_render_text_omits_footnote_when_all_defined(test_set):
    model = TableModel(
        {s.text: label_probs(**{s.label.name.lower(): 0.9}) for s in test_set}
    )
    balanced = test_set + [make_sentence(9, SectionLabel.PROCEDURAL_HISTORY, text="ph")]
    model.table["ph"] = label_probs(procedural_history=0.9)
    text = classification_report(model, balanced).render_text()
    assert "* zero-denominator" not in text


def test_warning_report_tables_match_sweep(table_model, test_set):
    report = warning_report(table_model, test_set, SWEEP_TAUS)
    assert report.n_sentences == 6
    assert len(report.tables) == 3
    for table in report.tables:
        assert table == sweep_pairs(table_model, test_set, table.tau)

    record = report.to_dict()
    assert record["pairs"] == 36
    assert [t["tau"] for t in record["tables"]] == [0.05, 0.10, 0.20]
    json.dumps(record)

    text = report.render_text()
    assert "tau" in text
    assert "0.05" in text and "0.20" in text


def test_warning_report_sorts_taus(table_model, test_set):
    report = warning_report(table_model, test_set, (0.20, 0.05, 0.10))
    assert [t.tau for t in report.tables] == [0.05, 0.10, 0.20]


def test_warning_report_validates_inputs(table_model, test_set):
    with pytest.raises(InvalidThreshold):
        warning_report(table_model, test_set, ())
    with pytest.raises(EmptyTestSet):
        warning_report(table_model, [], SWEEP_TAUS)
    with pytest.raises(InvalidThreshold):
        warning_report(table_model, test_set, (0.05, 1.5))


def test_warning_counts_monotone_in_tau(table_model, test_set):
    report = warning_report(table_model, test_set, (0.05, 0.10, 0.20, 0.5, 0.9))
    counts = [t.total_warnings for t in report.tables]
    assert counts == sorted(counts)


def test_compare_models_deltas(test_set, table_model):
    worse = TableModel(default=label_probs(facts=0.9), fingerprint="constant")
    a = classification_report(worse, test_set)
    b = classification_report(table_model, test_set)
    comparison = compare_models(a, b)
    assert comparison.backend_a == "table"
    assert comparison.weighted_delta["f1"] == pytest.approx(
        b.summary.weighted_f1 - a.summary.weighted_f1
    )
    record = comparison.to_dict()
    assert set(record["per_class_delta"]) == {l.value for l in LABEL_ORDER}
    json.dumps(record)


def test_compare_models_rejects_different_test_sets(table_model, test_set):
    a = classification_report(table_model, test_set)
    b = classification_report(table_model, test_set[:-1])
    with pytest.raises(FingerprintMismatch):
        compare_models(a, b)


def test_run_evaluation_bundles_everything(heading_phrases):
    corpus = ingest_corpus(generate_corpus(12, seed=5), heading_phrases, seed=0)
    model = TableModel(fingerprint="uniform-table")
    record = run_evaluation(model, corpus, split="test", taus=(0.05,), run_id="run-x")

    assert record.run_id == "run-x"
    assert record.model_fingerprint == "uniform-table"
    assert record.corpus_fingerprint == corpus.fingerprint()
    assert record.split == "test"
    assert record.taus == (0.05,)
    assert record.created_at is None  # stamped only at store time

    n_test = len(corpus.sentences("test"))
    assert record.classification.n_sentences == n_test
    assert record.warnings.n_sentences == n_test
    assert sum(record.label_counts.values()) == n_test

    payload = record.to_dict()
    assert payload["classification"]["backend"] == "table"
    json.dumps(payload)


def test_run_evaluation_rejects_empty_split(heading_phrases):
    corpus = ingest_corpus(generate_corpus(2, seed=0), heading_phrases, seed=0)
    # two documents: everything lands in train, test is empty
    model = TableModel()
    with pytest.raises(EmptyTestSet):
        run_evaluation(model, corpus, split="test")
