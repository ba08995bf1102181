"""HTTP JSON facade over problems and sessions.

Problems are posted once and compiled; sessions are cheap cursors over a
compiled problem.  All mutating routes are serialized per session with a
plain lock, so concurrent appends never interleave mid-operation, and a
failed append leaves the observable state byte-identical.

Sessions can be persisted as snapshots: the problem plus the trace of
successful mutations.  Replaying the trace is guaranteed to reproduce the
session state, because every mutation is deterministic.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .engine import Session, build
from .errors import (
    CompletionDisabled,
    InfeasibleProblem,
    InvalidAppend,
    LetterOutsideAlphabet,
    NothingToUndo,
    UnknownVariable,
    VariableCompleted,
)
from .problem import Problem, problem_from_json

DEFAULT_SUGGESTION_MAX_LEN = 64


class ApiResponse(JSONResponse):
    media_type = "application/json; charset=utf-8"


def _error(status: int, message: str, detail: object = None) -> ApiResponse:
    body: dict = {"error": message}
    if detail is not None:
        body["detail"] = detail
    return ApiResponse(body, status_code=status)


@dataclass
class SessionEntry:
    session: Session
    problem_id: str
    lock: threading.Lock = field(default_factory=threading.Lock)
    trace: list[dict] = field(default_factory=list)


class SessionStore:
    """In-memory registry of compiled problems and live sessions."""

    def __init__(self):
        self._lock = threading.Lock()
        self.problems: dict[str, Problem] = {}
        self.sessions: dict[str, SessionEntry] = {}

    @staticmethod
    def _new_id() -> str:
        return secrets.token_urlsafe(16)

    def add_problem(self, problem: Problem) -> str:
        with self._lock:
            pid = self._new_id()
            self.problems[pid] = problem
            return pid

    def add_session(self, problem_id: str, session: Session, session_id: str | None = None) -> str:
        with self._lock:
            sid = session_id or self._new_id()
            self.sessions[sid] = SessionEntry(session=session, problem_id=problem_id)
            return sid

    # -- snapshots -----------------------------------------------------

    def save_snapshots(self, directory: str | Path) -> int:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        count = 0
        for sid, entry in list(self.sessions.items()):
            problem = self.problems[entry.problem_id]
            payload = {"problem": problem.to_json(), "trace": entry.trace}
            (directory / f"{sid}.json").write_text(
                json.dumps(payload, indent=2), encoding="utf-8"
            )
            count += 1
        return count

    def load_snapshots(self, directory: str | Path) -> int:
        directory = Path(directory)
        if not directory.is_dir():
            return 0
        count = 0
        for path in sorted(directory.glob("*.json")):
            payload = json.loads(path.read_text(encoding="utf-8"))
            problem = problem_from_json(payload["problem"])
            session = build(problem)
            for step in payload["trace"]:
                op = step["op"]
                if op == "append":
                    session.append(step["variable"], step["text"])
                elif op == "complete":
                    session.complete(step["variable"])
                elif op == "undo":
                    session.undo()
                else:
                    raise ValueError(f"unknown snapshot op {op!r}")
            pid = self.add_problem(problem)
            entry = SessionEntry(session=session, problem_id=pid, trace=list(payload["trace"]))
            with self._lock:
                self.sessions[path.stem] = entry
            count += 1
        return count


def create_app(store: SessionStore | None = None, static_dir: str | Path | None = None) -> FastAPI:
    store = store if store is not None else SessionStore()
    app = FastAPI(title="rexconf", docs_url=None, redoc_url=None)
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    def malformed_request(request: Request, exc: RequestValidationError):
        return _error(400, "malformed request", detail=str(exc))

    @app.get("/v1/health")
    def health():
        return ApiResponse({"ok": True})

    @app.post("/v1/problems")
    def create_problem(payload: dict = Body(...)):
        try:
            problem = problem_from_json(payload)
        except ValueError as e:
            detail = {"pos": e.pos} if hasattr(e, "pos") else None
            return _error(400, str(e), detail=detail)
        try:
            probe = build(problem)
        except InfeasibleProblem as e:
            return _error(422, str(e))
        pid = store.add_problem(problem)
        stats = {
            "vars": problem.n_vars,
            "atoms": problem.n_bool_vars,
            "mdfa_states": [m.n_states for m in probe.mdfas],
        }
        return ApiResponse({"problem_id": pid, "stats": stats}, status_code=201)

    @app.post("/v1/sessions")
    def create_session(payload: dict = Body(...)):
        pid = payload.get("problem_id")
        problem = store.problems.get(pid) if isinstance(pid, str) else None
        if problem is None:
            return _error(404, "unknown problem")
        session = build(problem)
        sid = store.add_session(pid, session)
        return ApiResponse({"session_id": sid, "state": session.state()})

    def _entry(session_id: str) -> SessionEntry | None:
        return store.sessions.get(session_id)

    @app.post("/v1/sessions/{session_id}/append")
    def append(session_id: str, payload: dict = Body(...)):
        entry = _entry(session_id)
        if entry is None:
            return _error(404, "unknown session")
        variable = payload.get("variable")
        text = payload.get("text")
        if not isinstance(variable, str) or not isinstance(text, str) or not text:
            return _error(400, "malformed request", detail="need variable and non-empty text")
        with entry.lock:
            try:
                entry.session.append(variable, text)
            except UnknownVariable as e:
                return _error(400, str(e.args[0]))
            except VariableCompleted as e:
                return _error(409, str(e))
            except LetterOutsideAlphabet as e:
                return _error(400, str(e))
            except InvalidAppend as e:
                return _error(409, str(e))
            entry.trace.append({"op": "append", "variable": variable, "text": text})
            return ApiResponse({"state": entry.session.state()})

    @app.post("/v1/sessions/{session_id}/complete")
    def complete(session_id: str, payload: dict = Body(...)):
        entry = _entry(session_id)
        if entry is None:
            return _error(404, "unknown session")
        variable = payload.get("variable")
        if not isinstance(variable, str):
            return _error(400, "malformed request", detail="need variable")
        with entry.lock:
            try:
                entry.session.complete(variable)
            except UnknownVariable as e:
                return _error(400, str(e.args[0]))
            except (VariableCompleted, CompletionDisabled) as e:
                return _error(409, str(e))
            except InvalidAppend as e:
                return _error(409, str(e))
            entry.trace.append({"op": "complete", "variable": variable})
            return ApiResponse({"state": entry.session.state()})

    @app.post("/v1/sessions/{session_id}/undo")
    def undo(session_id: str):
        entry = _entry(session_id)
        if entry is None:
            return _error(404, "unknown session")
        with entry.lock:
            try:
                entry.session.undo()
            except NothingToUndo as e:
                return _error(409, str(e))
            entry.trace.append({"op": "undo"})
            return ApiResponse({"state": entry.session.state()})

    @app.get("/v1/sessions/{session_id}/domain/{variable}")
    def domain(session_id: str, variable: str, suggest: str | None = None, max_len: str | None = None):
        entry = _entry(session_id)
        if entry is None:
            return _error(404, "unknown session")
        try:
            k = int(suggest) if suggest is not None else 0
            cap = int(max_len) if max_len is not None else DEFAULT_SUGGESTION_MAX_LEN
        except ValueError:
            return _error(400, "malformed request", detail="suggest and max_len must be integers")
        if suggest is not None and k < 1:
            return _error(400, "malformed request", detail="suggest must be at least 1")
        if cap < 0:
            return _error(400, "malformed request", detail="max_len must be non-negative")
        with entry.lock:
            session = entry.session
            try:
                payload = {
                    "regex": session.valid_domain_regex(variable),
                    "can_complete": session.can_complete(variable),
                    "next_letters": session.next_letters(variable),
                    "suggestions": session.suggestions(variable, k, cap) if k >= 1 else [],
                }
            except UnknownVariable as e:
                return _error(404, str(e.args[0]))
            return ApiResponse(payload)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
