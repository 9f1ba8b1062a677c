"""HTTP API over documents, sessions, models, and evaluation runs.

The composition root: wires the corpus pipeline, the classifier
registry, the warning engine, and the session state machine behind a
request/response interface. All state lives in the project store, so a
restart loses nothing; per-session writes are serialized by in-process
locks; evaluation runs execute one at a time in a background thread and
are polled by id.

Every response carries the wire-contract header
``cabinet-api-version: 1``.
"""

from __future__ import annotations

import functools
import threading
from datetime import datetime, timezone
from pathlib import Path

import numpy as np
from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from casebrief.classifier.artifact import load_model
from casebrief.classifier.baseline import BaselineModel
from casebrief.classifier.types import SentenceClassifier
from casebrief.corpus.io import read_processed_corpus, record_to_brief
from casebrief.corpus.segment import ingest_brief, load_heading_patterns
from casebrief.corpus.types import CaseBrief, RawBrief
from casebrief.evaluation.records import run_evaluation
from casebrief.labels import NUM_LABELS, SectionLabel
from casebrief.service.config import ServiceConfig
from casebrief.service.errors import ApiError, to_api_error
from casebrief.service.store import ProjectStore
from casebrief.session.engine import SessionEngine
from casebrief.session.types import ProficiencyLevel, Session
from casebrief.warnings import SWEEP_TAUS, WarningDecision

API_VERSION = "1"


class SessionCreate(BaseModel):
    user: str
    level: int
    doc_id: str


class AnnotationIn(BaseModel):
    span: tuple[int, int]
    label: str


class SuggestionIn(BaseModel):
    span: tuple[int, int]


class ResolveIn(BaseModel):
    action: str
    label: str | None = None


class CategorizationIn(BaseModel):
    element_id: int
    label: str


class EvalRunIn(BaseModel):
    corpus_path: str
    split: str = "test"
    taus: list[float] | None = None
    model: str | None = None
    baseline_seed: int = 0


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _api(fn):
    """Translate module exceptions into their wire form."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ApiError:
            raise
        except Exception as exc:
            raise to_api_error(exc) from exc

    return wrapper


def _decision_view(decision: WarningDecision) -> dict:
    return {
        "decision": decision.decision.value,
        "assigned_label": decision.assigned_label.value,
        "prob_assigned": decision.prob_assigned,
        "tau": decision.tau,
    }


def _document_view(brief: CaseBrief) -> dict:
    return {
        "doc_id": brief.doc_id,
        "title": brief.title,
        "body": brief.body,
        "sections": [
            {
                "heading_raw": s.heading_raw,
                "label": s.label.value if s.label else None,
                "text": s.text,
                "char_span": list(s.char_span),
            }
            for s in brief.sections
        ],
        "sentences": [
            {
                "sent_id": s.sent_id,
                "label": s.label.value if s.label else None,
                "text": s.text,
                "char_span": list(s.char_span),
            }
            for s in brief.sentences
        ],
    }


def create_app(config: ServiceConfig) -> FastAPI:
    store = ProjectStore(config.store_path)
    registry: dict[str, SentenceClassifier] = {}

    if config.model_path:
        registry["default"] = load_model(config.model_path)
    for name in store.list_models():
        model = store.get_model(name)
        if model is not None:
            registry.setdefault(name, model)
    if not registry:
        # A service must always have a model to serve; with nothing
        # trained yet, the uniform baseline is the honest default.
        fallback = BaselineModel(
            frequencies=np.full(NUM_LABELS, 1.0 / NUM_LABELS),
            fingerprint="baseline-uniform",
        )
        store.register_model("baseline", fallback)
        registry["baseline"] = fallback
    default_model_name = "default" if "default" in registry else sorted(registry)[0]

    app = FastAPI(title="case brief annotation service")
    app.state.store = store
    app.state.config = config
    app.state.registry = registry
    app.state.default_model_name = default_model_name

    patterns = load_heading_patterns()
    locks: dict[str, threading.Lock] = {}
    locks_guard = threading.Lock()
    eval_lock = threading.Lock()

    def session_lock(session_id: str) -> threading.Lock:
        with locks_guard:
            return locks.setdefault(session_id, threading.Lock())

    def resolve_model(name: str | None) -> SentenceClassifier:
        model_name = name or default_model_name
        if model_name in registry:
            return registry[model_name]
        model = store.get_model(model_name)
        if model is None:
            raise ApiError("NotFound", f"no model named {model_name!r}")
        registry[model_name] = model
        return model

    def load_session(session_id: str) -> Session:
        session = store.get_session(session_id)
        if session is None:
            raise ApiError("NotFound", f"no session {session_id!r}")
        return session

    def engine_for(doc_id: str) -> SessionEngine:
        return SessionEngine(
            document=store.get_document(doc_id),
            model=resolve_model(None),
            worked_example=store.get_worked_example(doc_id),
            tau=config.default_tau,
            level_gates=config.default_level_gates,
            reveal_explanations=config.reveal_explanations,
        )

    def session_view(session: Session, engine: SessionEngine) -> dict:
        view = session.to_dict()
        view["tau"] = engine.tau
        view["available_operations"] = sorted(
            config.default_level_gates.get(int(session.level), frozenset())
        )
        view["elements"] = (
            engine.categorization_elements()
            if session.level == ProficiencyLevel.NOVICE
            else []
        )
        view["brief_draft"] = {
            label.value: [a.annotation_id for a in annotations]
            for label, annotations in session.brief_draft().items()
        }
        return view

    @app.middleware("http")
    async def version_header(request: Request, call_next):
        response = await call_next(request)
        response.headers["cabinet-api-version"] = API_VERSION
        return response

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content=exc.to_dict())

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(request: Request, exc: RequestValidationError):
        error = ApiError("Validation", "malformed request payload", {"errors": exc.errors()})
        return JSONResponse(status_code=error.status, content=error.to_dict())

    # -- documents ---------------------------------------------------

    @app.post("/documents")
    @_api
    def create_document(payload: dict = Body(...)):
        if "sections" in payload and "sentences" in payload:
            brief, _ = record_to_brief(payload)
        else:
            if "body" not in payload or not str(payload.get("body", "")):
                raise ApiError("Validation", "document needs a non-empty body")
            raw = RawBrief(
                doc_id=str(payload.get("doc_id") or store.new_id("d")),
                title=str(payload.get("title", "")),
                body=str(payload["body"]),
            )
            brief = ingest_brief(raw, patterns)
        if store.has_document(brief.doc_id):
            raise ApiError("Conflict", f"document {brief.doc_id!r} already exists")
        store.put_document(brief)
        return _document_view(brief)

    @app.get("/documents/{doc_id}")
    @_api
    def get_document(doc_id: str):
        return _document_view(store.get_document(doc_id))

    # -- sessions ----------------------------------------------------

    @app.post("/sessions")
    @_api
    def create_session(payload: SessionCreate):
        level = ProficiencyLevel.parse(payload.level)
        if not store.has_document(payload.doc_id):
            raise ApiError("NotFound", f"no document {payload.doc_id!r}")
        session = Session(
            session_id=store.new_id("s"),
            user_id=payload.user,
            level=level,
            doc_id=payload.doc_id,
        )
        store.put_session(session)
        return session_view(session, engine_for(session.doc_id))

    @app.get("/sessions/{session_id}")
    @_api
    def get_session(session_id: str):
        session = load_session(session_id)
        return session_view(session, engine_for(session.doc_id))

    @app.post("/sessions/{session_id}/annotations")
    @_api
    def post_annotation(session_id: str, payload: AnnotationIn):
        label = SectionLabel.from_string(payload.label)
        with session_lock(session_id):
            session = load_session(session_id)
            engine = engine_for(session.doc_id)
            decision = engine.submit_annotation(session, payload.span, label)
            store.put_session(session)
        return {
            "annotation": session.annotations[-1].to_dict(),
            "warning": _decision_view(decision) if decision is not None else None,
        }

    @app.post("/sessions/{session_id}/suggestions")
    @_api
    def post_suggestion(session_id: str, payload: SuggestionIn):
        with session_lock(session_id):
            session = load_session(session_id)
            engine = engine_for(session.doc_id)
            annotation, probs = engine.suggest_category(session, payload.span)
            store.put_session(session)
        return {
            "annotation": annotation.to_dict(),
            "predicted_label": annotation.label.value,
            "probs": {label.value: p for label, p in probs.items()},
        }

    @app.post("/sessions/{session_id}/suggestions/{annotation_id}/resolve")
    @_api
    def post_resolve(session_id: str, annotation_id: str, payload: ResolveIn):
        corrected = SectionLabel.from_string(payload.label) if payload.label else None
        with session_lock(session_id):
            session = load_session(session_id)
            engine = engine_for(session.doc_id)
            annotation = engine.resolve_suggestion(
                session, annotation_id, payload.action, corrected
            )
            store.put_session(session)
        return {"annotation": annotation.to_dict()}

    @app.get("/sessions/{session_id}/highlights")
    @_api
    def get_highlights(session_id: str):
        session = load_session(session_id)
        engine = engine_for(session.doc_id)
        return {"highlights": [h.to_dict() for h in engine.highlight_document(session)]}

    @app.get("/sessions/{session_id}/worked-example")
    @_api
    def get_worked_example(session_id: str):
        session = load_session(session_id)
        engine = engine_for(session.doc_id)
        return engine.get_worked_example(session).to_dict()

    @app.post("/sessions/{session_id}/categorizations")
    @_api
    def post_categorization(session_id: str, payload: CategorizationIn):
        label = SectionLabel.from_string(payload.label)
        with session_lock(session_id):
            session = load_session(session_id)
            engine = engine_for(session.doc_id)
            event = engine.submit_categorization(session, payload.element_id, label)
            store.put_session(session)
        return {"feedback": event.to_dict()}

    @app.get("/sessions/{session_id}/brief")
    @_api
    def get_brief(session_id: str):
        session = load_session(session_id)
        engine = engine_for(session.doc_id)
        return engine.export_brief(session).to_dict()

    # -- evaluation runs ----------------------------------------------

    def run_eval_job(run_id: str, payload: EvalRunIn) -> None:
        try:
            store.put_eval_run(
                run_id,
                {"run_id": run_id, "status": "running", "created_at": _now()},
            )
            model = resolve_model(payload.model)
            corpus = read_processed_corpus(Path(payload.corpus_path))
            record = run_evaluation(
                model,
                corpus,
                split=payload.split,
                taus=tuple(payload.taus) if payload.taus else SWEEP_TAUS,
                baseline_seed=payload.baseline_seed,
                run_id=run_id,
            )
            result = record.to_dict()
            result["created_at"] = _now()
            store.put_eval_run(run_id, {**result, "status": "done"})
        except Exception as exc:
            store.put_eval_run(
                run_id,
                {
                    "run_id": run_id,
                    "status": "failed",
                    "error": str(exc),
                    "created_at": _now(),
                },
            )
        finally:
            eval_lock.release()

    @app.post("/eval/runs")
    @_api
    def post_eval_run(payload: EvalRunIn):
        if not eval_lock.acquire(blocking=False):
            raise ApiError("Conflict", "an evaluation run is already in progress")
        run_id = store.new_id("run")
        store.put_eval_run(
            run_id, {"run_id": run_id, "status": "queued", "created_at": _now()}
        )
        thread = threading.Thread(
            target=run_eval_job, args=(run_id, payload), daemon=True
        )
        thread.start()
        return {"run_id": run_id, "status": "queued"}

    @app.get("/eval/runs/{run_id}")
    @_api
    def get_eval_run(run_id: str):
        record = store.get_eval_run(run_id)
        if record is None:
            raise ApiError("NotFound", f"no evaluation run {run_id!r}")
        return record

    return app
