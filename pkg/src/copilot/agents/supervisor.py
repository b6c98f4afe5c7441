"""Supervisor routing: one completion chooses the worker agent."""

from __future__ import annotations

from pathlib import Path

from ..models.messages import ChatMessage, CompletionRequest

WORKER_KINDS = ("decode", "root_cause", "dpe_trace")
FALLBACK = "decode"

PROMPTS_DIR = Path(__file__).parent / "prompts"

RETRY_TEXT = "Reply with exactly one token: decode, root_cause, or dpe_trace."


def load_prompt(name: str) -> str:
    return (PROMPTS_DIR / f"{name}.md").read_text(encoding="utf-8")


def _normalize(reply: str) -> str:
    return reply.strip().strip(".`'\"").lower()


def supervisor_route(user_text: str, context: str, chat_backend) -> str:
    """Pick one of the three workers; corrective retry once, then fallback."""
    user = ""
    if context:
        user += f"Context:\n{context}\n\n"
    user += f"Operator request: {user_text}\n\n{RETRY_TEXT}"
    messages = [
        ChatMessage(role="system", text=load_prompt("routing")),
        ChatMessage(role="user", text=user),
    ]
    reply = chat_backend.complete(CompletionRequest(messages=messages))
    token = _normalize(reply.text)
    if token in WORKER_KINDS:
        return token
    messages = messages + [
        ChatMessage(role="assistant", text=reply.text),
        ChatMessage(role="user", text=RETRY_TEXT),
    ]
    reply = chat_backend.complete(CompletionRequest(messages=messages))
    token = _normalize(reply.text)
    return token if token in WORKER_KINDS else FALLBACK
