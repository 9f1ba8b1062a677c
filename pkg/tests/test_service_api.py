"""HTTP surface: views, error envelopes, gating, and evaluation runs."""

import threading
import time

import pytest
from fastapi.testclient import TestClient

import casebrief.service.app as app_module
from casebrief.corpus.io import ingest_corpus, write_processed_corpus
from casebrief.corpus.synthetic import generate_corpus
from casebrief.labels import SectionLabel
from casebrief.service.app import API_VERSION, create_app
from casebrief.service.config import ServiceConfig
from casebrief.service.store import ProjectStore
from casebrief.session.types import WorkedExample, WorkedItem

from conftest import TWO_SECTION_BODY

RAW_DOC = {"doc_id": "pierce", "title": "Pierce v. Ashford", "body": TWO_SECTION_BODY}


@pytest.fixture
def store_root(tmp_path):
    return tmp_path / "store"


@pytest.fixture
def client(store_root):
    app = create_app(ServiceConfig(store_path=str(store_root)))
    with TestClient(app) as c:
        yield c


def seed_pierce(client):
    response = client.post("/documents", json=RAW_DOC)
    assert response.status_code == 200, response.text
    return response.json()


def make_session(client, level, doc_id="pierce"):
    response = client.post(
        "/sessions", json={"user": "u1", "level": level, "doc_id": doc_id}
    )
    assert response.status_code == 200, response.text
    return response.json()


def seed_worked_example(store_root, doc):
    """Curated content has no POST endpoint; seed it via a second store handle."""
    sentences = doc["sentences"]
    example = WorkedExample(
        doc_id=doc["doc_id"],
        items=(
            WorkedItem(
                span=tuple(sentences[0]["char_span"]),
                label=SectionLabel.FACTS,
                explanation="The report date fixes the notice timeline.",
            ),
            WorkedItem(
                span=tuple(sentences[2]["char_span"]),
                label=SectionLabel.ISSUE,
                explanation="This frames the question presented.",
            ),
        ),
    )
    ProjectStore(store_root).put_worked_example(example)
    return example


# ------------------------------------------------------------- envelope

def test_version_header_on_success_and_error(client):
    ok = client.get("/documents/missing")
    assert ok.status_code == 404
    assert ok.headers["cabinet-api-version"] == API_VERSION

    seed_pierce(client)
    found = client.get("/documents/pierce")
    assert found.status_code == 200
    assert found.headers["cabinet-api-version"] == API_VERSION


def test_error_envelope_shape(client):
    response = client.get("/documents/missing")
    body = response.json()
    assert set(body) == {"error"}
    assert body["error"]["code"] == "NotFound"
    assert "missing" in body["error"]["message"]
    assert isinstance(body["error"]["details"], dict)


def test_malformed_payload_is_a_validation_error(client):
    seed_pierce(client)
    response = client.post("/sessions", json={"user": "u1"})  # level/doc_id absent
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "Validation"


# ------------------------------------------------------------ documents

def test_raw_document_is_ingested(client):
    doc = seed_pierce(client)
    assert doc["doc_id"] == "pierce"
    assert [s["label"] for s in doc["sections"]] == ["Facts", "Issue"]
    assert len(doc["sentences"]) == 3
    assert doc["sentences"][0]["sent_id"] == "pierce:0000"

    fetched = client.get("/documents/pierce").json()
    assert fetched == doc


def test_processed_document_is_stored_verbatim(client):
    doc = seed_pierce(client)
    processed = {**doc, "doc_id": "pierce-copy", "split": "test"}
    processed["sentences"] = [
        {**s, "sent_id": s["sent_id"].replace("pierce", "pierce-copy")}
        for s in doc["sentences"]
    ]
    response = client.post("/documents", json=processed)
    assert response.status_code == 200
    assert response.json()["sections"] == doc["sections"]


def test_duplicate_document_conflicts(client):
    seed_pierce(client)
    response = client.post("/documents", json=RAW_DOC)
    assert response.status_code == 409
    assert response.json()["error"]["code"] == "Conflict"


def test_headingless_document_rejected(client):
    response = client.post(
        "/documents", json={"doc_id": "x", "title": "", "body": "No headings here."}
    )
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "Validation"


def test_document_without_body_rejected(client):
    response = client.post("/documents", json={"doc_id": "x", "title": "t"})
    assert response.status_code == 400


def test_document_id_generated_when_absent(client):
    response = client.post("/documents", json={"title": "t", "body": TWO_SECTION_BODY})
    assert response.status_code == 200
    assert response.json()["doc_id"].startswith("d-")


# ------------------------------------------------------------- sessions

def test_session_view_shape(client):
    seed_pierce(client)
    view = make_session(client, level=3)
    assert view["level"] == 3
    assert view["doc_id"] == "pierce"
    assert view["tau"] == pytest.approx(0.05)
    assert view["available_operations"] == ["submit_annotation"]
    assert view["elements"] == []  # only level 2 sees categorization elements
    assert view["brief_draft"] == {label.value: [] for label in SectionLabel}
    assert view["annotations"] == []

    again = client.get(f"/sessions/{view['session_id']}").json()
    assert again["session_id"] == view["session_id"]


def test_session_for_unknown_document_404s(client):
    response = client.post(
        "/sessions", json={"user": "u", "level": 3, "doc_id": "ghost"}
    )
    assert response.status_code == 404


def test_session_with_bad_level_rejected(client):
    seed_pierce(client)
    response = client.post(
        "/sessions", json={"user": "u", "level": 9, "doc_id": "pierce"}
    )
    assert response.status_code == 400


def test_novice_session_lists_elements(client, store_root):
    doc = seed_pierce(client)
    seed_worked_example(store_root, doc)
    view = make_session(client, level=2)
    assert len(view["elements"]) == 2
    assert view["elements"][0]["element_id"] == 0
    assert "label" not in view["elements"][0]
    assert view["available_operations"] == ["submit_categorization"]


# --------------------------------------------------------------- gating

def test_gating_maps_to_403(client):
    doc = seed_pierce(client)
    session = make_session(client, level=1)
    sid = session["session_id"]
    span = doc["sentences"][0]["char_span"]

    blocked = [
        client.post(f"/sessions/{sid}/annotations", json={"span": span, "label": "Facts"}),
        client.post(f"/sessions/{sid}/suggestions", json={"span": span}),
        client.post(f"/sessions/{sid}/suggestions/a1/resolve", json={"action": "confirm"}),
        client.get(f"/sessions/{sid}/highlights"),
        client.post(f"/sessions/{sid}/categorizations", json={"element_id": 0, "label": "Facts"}),
    ]
    for response in blocked:
        assert response.status_code == 403
        assert response.json()["error"]["code"] == "LevelGate"


# ---------------------------------------------------------- annotations

def test_annotation_at_level_three_returns_decision(client):
    doc = seed_pierce(client)
    session = make_session(client, level=3)
    span = doc["sentences"][0]["char_span"]

    response = client.post(
        f"/sessions/{session['session_id']}/annotations",
        json={"span": [span[0] + 2, span[0] + 8], "label": "Facts"},
    )
    assert response.status_code == 200
    body = response.json()
    # fresh store serves the uniform baseline: 1/6 >= 0.05, abstains
    assert body["warning"]["decision"] == "Abstain"
    assert body["warning"]["prob_assigned"] == pytest.approx(1 / 6)
    assert body["warning"]["tau"] == pytest.approx(0.05)
    assert body["annotation"]["span"] == span  # snapped to the sentence
    assert body["annotation"]["status"] == "user"

    stored = client.get(f"/sessions/{session['session_id']}").json()
    assert len(stored["annotations"]) == 1
    assert stored["brief_draft"]["Facts"] == [body["annotation"]["annotation_id"]]


def test_annotation_above_level_three_has_no_warning(client):
    doc = seed_pierce(client)
    session = make_session(client, level=4)
    span = doc["sentences"][0]["char_span"]
    response = client.post(
        f"/sessions/{session['session_id']}/annotations",
        json={"span": span, "label": "Rule"},
    )
    assert response.status_code == 200
    assert response.json()["warning"] is None


def test_annotation_with_bad_span_rejected(client):
    seed_pierce(client)
    session = make_session(client, level=3)
    response = client.post(
        f"/sessions/{session['session_id']}/annotations",
        json={"span": [0, 2], "label": "Facts"},  # preamble: no sentence
    )
    assert response.status_code == 400

    response = client.post(
        f"/sessions/{session['session_id']}/annotations",
        json={"span": [5, 5], "label": "Facts"},
    )
    assert response.status_code == 400


def test_annotation_with_unknown_label_rejected(client):
    doc = seed_pierce(client)
    session = make_session(client, level=3)
    response = client.post(
        f"/sessions/{session['session_id']}/annotations",
        json={"span": doc["sentences"][0]["char_span"], "label": "Dissent"},
    )
    assert response.status_code == 400


# ---------------------------------------------------------- suggestions

def test_suggestion_lifecycle_over_http(client):
    doc = seed_pierce(client)
    session = make_session(client, level=4)
    sid = session["session_id"]
    span = doc["sentences"][2]["char_span"]

    suggested = client.post(f"/sessions/{sid}/suggestions", json={"span": span})
    assert suggested.status_code == 200
    body = suggested.json()
    assert body["annotation"]["status"] == "suggested"
    assert body["predicted_label"] in [l.value for l in SectionLabel]
    assert sum(body["probs"].values()) == pytest.approx(1.0)
    aid = body["annotation"]["annotation_id"]

    resolved = client.post(
        f"/sessions/{sid}/suggestions/{aid}/resolve",
        json={"action": "correct", "label": "Issue"},
    )
    assert resolved.status_code == 200
    assert resolved.json()["annotation"]["status"] == "confirmed"
    assert resolved.json()["annotation"]["label"] == "Issue"

    again = client.post(
        f"/sessions/{sid}/suggestions/{aid}/resolve", json={"action": "confirm"}
    )
    assert again.status_code == 409
    assert again.json()["error"]["code"] == "Conflict"


def test_resolving_unknown_suggestion_404s(client):
    seed_pierce(client)
    session = make_session(client, level=4)
    response = client.post(
        f"/sessions/{session['session_id']}/suggestions/a7/resolve",
        json={"action": "confirm"},
    )
    assert response.status_code == 404


# ----------------------------------------------- highlights and exports

def test_highlights_at_level_five(client):
    doc = seed_pierce(client)
    session = make_session(client, level=5)
    response = client.get(f"/sessions/{session['session_id']}/highlights")
    assert response.status_code == 200
    highlights = response.json()["highlights"]
    assert [h["sent_id"] for h in highlights] == [s["sent_id"] for s in doc["sentences"]]
    for h in highlights:
        assert h["confidence"] == pytest.approx(1 / 6)  # uniform baseline


def test_brief_export_roundtrip(client):
    doc = seed_pierce(client)
    session = make_session(client, level=3)
    sid = session["session_id"]

    empty = client.get(f"/sessions/{sid}/brief")
    assert empty.status_code == 400
    assert empty.json()["error"]["code"] == "Validation"

    client.post(
        f"/sessions/{sid}/annotations",
        json={"span": doc["sentences"][0]["char_span"], "label": "Facts"},
    )
    brief = client.get(f"/sessions/{sid}/brief")
    assert brief.status_code == 200
    sections = brief.json()["sections"]
    assert [s["label"] for s in sections] == [l.value for l in SectionLabel]
    assert len(sections[0]["spans"]) == 1


# -------------------------------------------------------- worked example

def test_worked_example_at_level_one(client, store_root):
    doc = seed_pierce(client)
    example = seed_worked_example(store_root, doc)
    session = make_session(client, level=1)
    response = client.get(f"/sessions/{session['session_id']}/worked-example")
    assert response.status_code == 200
    assert response.json() == example.to_dict()


def test_worked_example_missing_404s(client):
    seed_pierce(client)
    session = make_session(client, level=1)
    response = client.get(f"/sessions/{session['session_id']}/worked-example")
    assert response.status_code == 404


def test_categorization_feedback_over_http(client, store_root):
    doc = seed_pierce(client)
    seed_worked_example(store_root, doc)
    session = make_session(client, level=2)
    sid = session["session_id"]

    match = client.post(
        f"/sessions/{sid}/categorizations", json={"element_id": 0, "label": "Facts"}
    )
    assert match.status_code == 200
    assert match.json()["feedback"]["payload"]["match"] is True

    mismatch = client.post(
        f"/sessions/{sid}/categorizations", json={"element_id": 1, "label": "Holding"}
    )
    assert mismatch.json()["feedback"]["kind"] == "ExpertReveal"
    assert mismatch.json()["feedback"]["payload"]["expert_label"] == "Issue"

    missing = client.post(
        f"/sessions/{sid}/categorizations", json={"element_id": 9, "label": "Facts"}
    )
    assert missing.status_code == 404


# ------------------------------------------------------------ eval runs

def poll_run(client, run_id, timeout=30.0):
    deadline = time.time() + timeout
    while time.time() < deadline:
        record = client.get(f"/eval/runs/{run_id}").json()
        if record["status"] in ("done", "failed"):
            return record
        time.sleep(0.05)
    raise AssertionError(f"run {run_id} did not finish: {record}")


def test_eval_run_end_to_end(client, tmp_path, heading_phrases):
    corpus = ingest_corpus(generate_corpus(12, seed=5), heading_phrases, seed=0)
    corpus_path = tmp_path / "corpus.proc.jsonl"
    write_processed_corpus(corpus_path, corpus)

    response = client.post("/eval/runs", json={"corpus_path": str(corpus_path)})
    assert response.status_code == 200
    run_id = response.json()["run_id"]
    assert response.json()["status"] == "queued"

    record = poll_run(client, run_id)
    assert record["status"] == "done"
    assert record["split"] == "test"
    assert record["taus"] == [0.05, 0.10, 0.20]
    assert record["classification"]["backend"] == "baseline"
    assert record["corpus_fingerprint"] == corpus.fingerprint()
    assert record["created_at"] is not None
    assert len(record["warnings"]["tables"]) == 3


def test_eval_run_failure_is_reported(client):
    response = client.post("/eval/runs", json={"corpus_path": "/nonexistent.jsonl"})
    assert response.status_code == 200
    record = poll_run(client, response.json()["run_id"])
    assert record["status"] == "failed"
    assert "error" in record


def test_unknown_eval_run_404s(client):
    assert client.get("/eval/runs/nothing").status_code == 404


def test_concurrent_eval_runs_conflict(client, monkeypatch):
    release = threading.Event()

    def slow_read(path):
        # the job reads the corpus first; hold it there to keep the lock busy
        release.wait(timeout=10)
        raise RuntimeError("halted for the conflict test")

    monkeypatch.setattr(app_module, "read_processed_corpus", slow_read)
    corpus_payload = {"corpus_path": "/unused.jsonl"}

    first = client.post("/eval/runs", json=corpus_payload)
    assert first.status_code == 200

    try:
        second = client.post("/eval/runs", json=corpus_payload)
        assert second.status_code == 409
        assert second.json()["error"]["code"] == "Conflict"
    finally:
        release.set()

    record = poll_run(client, first.json()["run_id"])
    assert record["status"] == "failed"
    assert "halted" in record["error"]

    third = client.post("/eval/runs", json=corpus_payload)
    assert third.status_code == 200  # the failure released the lock
    poll_run(client, third.json()["run_id"])


# --------------------------------------------------------- statelessness

def test_state_survives_app_restart(client, store_root):
    doc = seed_pierce(client)
    session = make_session(client, level=3)
    client.post(
        f"/sessions/{session['session_id']}/annotations",
        json={"span": doc["sentences"][0]["char_span"], "label": "Facts"},
    )

    reborn = create_app(ServiceConfig(store_path=str(store_root)))
    with TestClient(reborn) as second:
        fetched = second.get(f"/sessions/{session['session_id']}")
        assert fetched.status_code == 200
        assert len(fetched.json()["annotations"]) == 1
        assert second.get("/documents/pierce").status_code == 200
