"""Assistant HTTP service: chat endpoint, sessions, preprocessing pipeline.

One chat turn runs: optional segmentation (panel attachments), x4
upscaling, few-shot extraction, supervisor routing, then the chosen
worker agent. Sessions are append-only and journaled to disk as JSON
lines so history survives restarts.
"""

from __future__ import annotations

import base64
import binascii
import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .agents.react import AgentTrace
from .agents.supervisor import supervisor_route
from .agents.tools import SimClient, ToolRegistry, register_tools
from .agents.workers import run_worker
from .errors import (
    BackendUnavailable,
    ExtractionFailed,
    MultipleCandidates,
    NoWidgetFound,
    ScriptExhausted,
)
from .extraction.extract import FewShotExample, extract
from .raster import RasterImage
from .vision.ops import SegmentationParams, segment_widget, upscale

UPSCALE_FACTOR = 4


@dataclass
class SessionMessage:
    author: str  # operator | assistant
    text: str
    attachment_png_b64: Optional[str] = None
    trace: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "author": self.author,
            "text": self.text,
            "attachment_png_b64": self.attachment_png_b64,
            "trace": self.trace,
        }


@dataclass
class ChatSession:
    session_id: str
    created: float
    updated: float
    messages: list[SessionMessage] = field(default_factory=list)
    last_observation: str = ""  # context for follow-up turns

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "created": self.created,
            "updated": self.updated,
            "messages": [m.to_dict() for m in self.messages],
        }


class SessionStore:
    """In-memory sessions with an optional append-only JSONL journal."""

    def __init__(self, journal_path: Optional[str] = None):
        self._lock = threading.RLock()
        self._sessions: dict[str, ChatSession] = {}
        self._turn_locks: dict[str, threading.Lock] = {}
        self._journal_path = Path(journal_path) if journal_path else None
        if self._journal_path and self._journal_path.exists():
            self._replay()

    def _replay(self) -> None:
        with open(self._journal_path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    self._apply(json.loads(line))

    def _apply(self, entry: dict) -> None:
        if entry["op"] == "create":
            self._sessions[entry["session_id"]] = ChatSession(
                session_id=entry["session_id"],
                created=entry["ts"],
                updated=entry["ts"],
            )
        elif entry["op"] == "message":
            session = self._sessions[entry["session_id"]]
            session.messages.append(SessionMessage(**entry["message"]))
            session.updated = entry["ts"]
            if entry.get("observation"):
                session.last_observation = entry["observation"]

    def _journal(self, entry: dict) -> None:
        if self._journal_path:
            with open(self._journal_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(entry) + "\n")

    def create(self) -> ChatSession:
        with self._lock:
            session_id = uuid.uuid4().hex
            ts = time.time()
            self._sessions[session_id] = ChatSession(
                session_id=session_id, created=ts, updated=ts
            )
            self._journal({"op": "create", "session_id": session_id, "ts": ts})
            return self._sessions[session_id]

    def get(self, session_id: str) -> Optional[ChatSession]:
        with self._lock:
            return self._sessions.get(session_id)

    def turn_lock(self, session_id: str) -> threading.Lock:
        # one in-flight turn per session
        with self._lock:
            return self._turn_locks.setdefault(session_id, threading.Lock())

    def list(self) -> list[dict]:
        with self._lock:
            return [
                {
                    "session_id": s.session_id,
                    "created": s.created,
                    "updated": s.updated,
                    "message_count": len(s.messages),
                }
                for s in self._sessions.values()
            ]

    def append(
        self, session_id: str, message: SessionMessage, observation: str = ""
    ) -> None:
        with self._lock:
            session = self._sessions[session_id]
            ts = time.time()
            session.messages.append(message)
            session.updated = ts
            if observation:
                session.last_observation = observation
            self._journal(
                {
                    "op": "message",
                    "session_id": session_id,
                    "ts": ts,
                    "message": message.to_dict(),
                    "observation": observation or None,
                }
            )


@dataclass
class AssistantContext:
    """Everything one chat turn needs, wired once at startup."""

    chat_backend: object
    registry: ToolRegistry
    fewshot_examples: list[FewShotExample]
    sessions: SessionStore
    segmentation: SegmentationParams = SegmentationParams()

    @classmethod
    def build(
        cls,
        chat_backend,
        store,
        embedder,
        sim_client: SimClient,
        fewshot_examples,
        journal_path=None,
    ) -> "AssistantContext":
        return cls(
            chat_backend=chat_backend,
            registry=register_tools(store, embedder, sim_client),
            fewshot_examples=fewshot_examples,
            sessions=SessionStore(journal_path),
        )


def _decode_attachment(b64: str) -> RasterImage:
    try:
        raw = base64.b64decode(b64, validate=True)
        return RasterImage.from_png_bytes(raw)
    except (binascii.Error, ValueError, OSError) as exc:
        raise BadAttachment(str(exc)) from exc


class BadAttachment(Exception):
    pass


def run_chat_turn(
    ctx: AssistantContext,
    text: str,
    attachment_b64: Optional[str] = None,
    attachment_kind: str = "widget",
    session_context: str = "",
) -> tuple[str, AgentTrace, str]:
    """Run the preprocessing + agent pipeline for one turn.

    Returns (answer, trace, observation_text).
    """
    observation_text = session_context
    if attachment_b64:
        image = _decode_attachment(attachment_b64)
        if attachment_kind == "panel":
            image = segment_widget(image, ctx.segmentation).image
        image = upscale(image, UPSCALE_FACTOR)
        result = extract(image, ctx.chat_backend, ctx.fewshot_examples)
        observation_text = result.observation.describe()

    kind = supervisor_route(text, observation_text, ctx.chat_backend)
    trace = run_worker(
        kind,
        text,
        ctx.registry,
        ctx.chat_backend,
        observation_text=observation_text,
    )
    return trace.final_answer, trace, observation_text


def create_assistant_app(ctx: AssistantContext) -> FastAPI:
    app = FastAPI(title="operator assistant")
    app.state.ctx = ctx
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.post("/api/v1/chat")
    def chat(body: dict):
        text = (body.get("text") or "").strip()
        if not text:
            return JSONResponse({"error": "text must be non-empty"}, status_code=400)
        session_id = body.get("session_id")
        session = ctx.sessions.get(session_id) if session_id else None
        if session_id and session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        if session is None:
            session = ctx.sessions.create()

        try:
            with ctx.sessions.turn_lock(session.session_id):
                answer, trace, observation = run_chat_turn(
                    ctx,
                    text,
                    attachment_b64=body.get("attachment"),
                    attachment_kind=body.get("attachment_kind", "widget"),
                    session_context=session.last_observation,
                )
        except BadAttachment as exc:
            return JSONResponse({"error": f"bad image: {exc}"}, status_code=400)
        except NoWidgetFound as exc:
            return JSONResponse({"error": str(exc)}, status_code=422)
        except MultipleCandidates as exc:
            return JSONResponse(
                {"error": str(exc), "boxes": exc.boxes}, status_code=422
            )
        except ExtractionFailed as exc:
            return JSONResponse({"error": str(exc)}, status_code=422)
        except (BackendUnavailable, ScriptExhausted) as exc:
            return JSONResponse({"error": str(exc)}, status_code=503)

        ctx.sessions.append(
            session.session_id,
            SessionMessage(
                author="operator",
                text=text,
                attachment_png_b64=body.get("attachment"),
            ),
            observation=observation,
        )
        ctx.sessions.append(
            session.session_id,
            SessionMessage(author="assistant", text=answer, trace=trace.to_dict()),
        )
        return {
            "session_id": session.session_id,
            "answer": answer,
            "trace": trace.to_dict(),
        }

    @app.get("/api/v1/sessions")
    def list_sessions():
        return {"sessions": ctx.sessions.list()}

    @app.get("/api/v1/sessions/{session_id}")
    def get_session(session_id: str):
        session = ctx.sessions.get(session_id)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        return session.to_dict()

    return app
