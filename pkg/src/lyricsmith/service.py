"""HTTP facade for the co-writing workbench.

Endpoints: POST /suggest, GET /rhymes, session create/read/accept, GET /health.
Suggestion responses always carry server-recomputed constraint reports; the
session store is an append-only JSON log replayed at boot, so accepted lines
survive restarts without a database.
"""

from __future__ import annotations

import json
import random
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .errors import BackendUnavailable, UnknownWord
from .generation import (
    GenerationBackend,
    RemoteBackend,
    SuggestionRequest,
    suggest,
)
from .phonetics import Phonetics
from .rhyme import RhymeDictionary, Rhymer


@dataclass
class Session:
    id: str
    accepted_lines: list[str] = field(default_factory=list)
    created_at: float = 0.0
    updated_at: float = 0.0
    settings: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "accepted_lines": list(self.accepted_lines),
            "created_at": self.created_at,
            "updated_at": self.updated_at,
            "settings": dict(self.settings),
        }


class SessionStore:
    """Durable session records: one JSON line appended per mutation."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        if self.path.exists():
            self._replay()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._fh = self.path.open("a", encoding="utf-8")

    def _replay(self) -> None:
        with self.path.open(encoding="utf-8") as fh:
            for raw in fh:
                raw = raw.strip()
                if not raw:
                    continue
                record = json.loads(raw)
                if record["op"] == "create":
                    self._sessions[record["id"]] = Session(
                        id=record["id"],
                        created_at=record["ts"],
                        updated_at=record["ts"],
                        settings=record.get("settings", {}),
                    )
                elif record["op"] == "accept":
                    session = self._sessions.get(record["id"])
                    if session is not None:
                        session.accepted_lines.append(record["line"])
                        session.updated_at = record["ts"]

    def _append(self, record: dict) -> None:
        self._fh.write(json.dumps(record, ensure_ascii=False) + "\n")
        self._fh.flush()

    def create(self, settings: dict | None = None) -> Session:
        with self._lock:
            session = Session(
                id=uuid.uuid4().hex[:12],
                created_at=time.time(),
                updated_at=time.time(),
                settings=settings or {},
            )
            self._sessions[session.id] = session
            self._append(
                {
                    "op": "create",
                    "id": session.id,
                    "ts": session.created_at,
                    "settings": session.settings,
                }
            )
            return session

    def get(self, session_id: str) -> Session | None:
        return self._sessions.get(session_id)

    def accept(self, session_id: str, line: str) -> Session | None:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                return None
            session.accepted_lines.append(line)
            session.updated_at = time.time()
            self._append(
                {"op": "accept", "id": session_id, "line": line, "ts": session.updated_at}
            )
            return session

    def close(self) -> None:
        self._fh.close()


@dataclass
class ServiceState:
    phonetics: Phonetics
    rhymer: Rhymer
    rdict: RhymeDictionary
    backend: GenerationBackend
    store: SessionStore
    seed: int = 0
    default_k: int = 5


class SuggestBody(BaseModel):
    input_lines: list[str] = Field(min_length=1, max_length=4)
    syllable_target: int | None = None
    ending_word: str | None = None
    force_rhyme: bool = False
    k: int | None = None


class CreateSessionBody(BaseModel):
    settings: dict = Field(default_factory=dict)


class AcceptBody(BaseModel):
    line: str


def create_app(state: ServiceState, cors_origins: list[str] | None = None) -> FastAPI:
    app = FastAPI(title="lyricsmith service")
    app.state.service = state
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def invalid_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.post("/suggest")
    def post_suggest(body: SuggestBody):
        if body.ending_word is not None and body.force_rhyme:
            raise HTTPException(
                status_code=409, detail="ending_word and force_rhyme are mutually exclusive"
            )
        try:
            req = SuggestionRequest(
                input_lines=tuple(body.input_lines),
                syllable_target=body.syllable_target,
                ending_word=body.ending_word,
                force_rhyme=body.force_rhyme,
                k=body.k if body.k is not None else state.default_k,
            )
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        try:
            result = suggest(
                req,
                state.backend,
                state.phonetics,
                state.rhymer,
                state.rdict,
                rng=random.Random(state.seed),
            )
        except UnknownWord as exc:
            raise HTTPException(status_code=404, detail=f"unknown word: {exc}") from exc
        except BackendUnavailable as exc:
            raise HTTPException(status_code=503, detail=str(exc)) from exc
        return {
            "candidates": [
                {"line": c.line, "report": c.report.to_dict()} for c in result.candidates
            ],
            "queries": result.queries,
            "notes": result.notes,
        }

    @app.get("/rhymes")
    def get_rhymes(word: str, k: int = 8):
        try:
            ranked = state.rdict.top_rhymes_with_frequencies(word, k=k)
        except UnknownWord as exc:
            raise HTTPException(status_code=404, detail=f"unknown word: {exc}") from exc
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return {
            "word": word,
            "k": k,
            "rhymes": [{"word": w, "frequency": n} for w, n in ranked],
        }

    @app.post("/sessions")
    def create_session(body: CreateSessionBody | None = None):
        session = state.store.create((body.settings if body else {}) or {})
        return session.to_dict()

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = state.store.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return session.to_dict()

    @app.post("/sessions/{session_id}/accept")
    def accept_line(session_id: str, body: AcceptBody):
        session = state.store.accept(session_id, body.line)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return session.to_dict()

    @app.get("/health")
    def health():
        if isinstance(state.backend, RemoteBackend):
            available = state.backend.is_available()
        else:
            available = True
        return {
            "status": "ok" if available else "degraded",
            "backend": {"kind": state.backend.name, "available": available},
            "rhyme_buckets": len(state.rdict.buckets),
            "phoneme_cache": state.phonetics.cache_stats(),
        }

    return app
