"""File-backed project store: documents, worked examples, sessions, runs.

One JSON file per record under a fixed directory layout; writes go to a
temp file in the same directory and are renamed into place, so readers
never observe a half-written record and a crash cannot corrupt an
existing one. Model artifacts are directories under models/.
"""

from __future__ import annotations

import json
import os
import tempfile
import uuid
from pathlib import Path
from urllib.parse import quote, unquote

from casebrief.classifier.artifact import load_model
from casebrief.classifier.types import SentenceClassifier
from casebrief.corpus.io import brief_to_record, record_to_brief
from casebrief.corpus.types import CaseBrief
from casebrief.session.types import Session, UnknownDocument, WorkedExample

_COLLECTIONS = ("documents", "worked_examples", "sessions", "models", "eval_runs")


def _atomic_write(path: Path, payload: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _filename(record_id: str) -> str:
    return quote(record_id, safe="") + ".json"


class ProjectStore:
    """Durable single-node storage rooted at one directory."""

    def __init__(self, root: str | Path) -> None:
        self.root = Path(root)
        for name in _COLLECTIONS:
            (self.root / name).mkdir(parents=True, exist_ok=True)
        self._model_cache: dict[str, SentenceClassifier] = {}

    def new_id(self, prefix: str) -> str:
        return f"{prefix}-{uuid.uuid4().hex[:12]}"

    def _write(self, collection: str, record_id: str, record: dict) -> None:
        path = self.root / collection / _filename(record_id)
        _atomic_write(path, json.dumps(record, ensure_ascii=False, sort_keys=True, indent=2) + "\n")

    def _read(self, collection: str, record_id: str) -> dict | None:
        path = self.root / collection / _filename(record_id)
        if not path.is_file():
            return None
        return json.loads(path.read_text(encoding="utf-8"))

    def _list_ids(self, collection: str) -> list[str]:
        return sorted(
            unquote(p.name[: -len(".json")])
            for p in (self.root / collection).glob("*.json")
        )

    # -- documents -------------------------------------------------------

    def put_document(self, brief: CaseBrief) -> None:
        self._write("documents", brief.doc_id, brief_to_record(brief, "train"))

    def get_document(self, doc_id: str) -> CaseBrief:
        record = self._read("documents", doc_id)
        if record is None:
            raise UnknownDocument(f"no document {doc_id!r}")
        brief, _ = record_to_brief(record)
        return brief

    def has_document(self, doc_id: str) -> bool:
        return self._read("documents", doc_id) is not None

    def list_documents(self) -> list[str]:
        return self._list_ids("documents")

    # -- worked examples -------------------------------------------------

    def put_worked_example(self, example: WorkedExample) -> None:
        self._write("worked_examples", example.doc_id, example.to_dict())

    def get_worked_example(self, doc_id: str) -> WorkedExample | None:
        record = self._read("worked_examples", doc_id)
        return WorkedExample.from_dict(record) if record is not None else None

    # -- sessions --------------------------------------------------------

    def put_session(self, session: Session) -> None:
        self._write("sessions", session.session_id, session.to_dict())

    def get_session(self, session_id: str) -> Session | None:
        record = self._read("sessions", session_id)
        return Session.from_dict(record) if record is not None else None

    def list_sessions(self) -> list[str]:
        return self._list_ids("sessions")

    # -- models ----------------------------------------------------------

    def model_dir(self, name: str) -> Path:
        return self.root / "models" / quote(name, safe="")

    def register_model(self, name: str, model: SentenceClassifier) -> None:
        model.save(self.model_dir(name))
        self._model_cache[name] = model

    def get_model(self, name: str) -> SentenceClassifier | None:
        if name in self._model_cache:
            return self._model_cache[name]
        path = self.model_dir(name)
        if not (path / "manifest.json").is_file():
            return None
        model = load_model(path)
        self._model_cache[name] = model
        return model

    def list_models(self) -> list[str]:
        return sorted(
            unquote(p.parent.name)
            for p in (self.root / "models").glob("*/manifest.json")
        )

    # -- eval runs -------------------------------------------------------

    def put_eval_run(self, run_id: str, record: dict) -> None:
        self._write("eval_runs", run_id, record)

    def get_eval_run(self, run_id: str) -> dict | None:
        return self._read("eval_runs", run_id)
