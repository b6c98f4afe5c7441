"""Scripted chat backend: deterministic replay for offline tests.

A script is an ordered list of (matcher, reply). Each complete() call
scans forward from the last consumed entry for the first entry whose
matcher occurs (case-insensitive substring; "*" matches anything) in the
latest user/tool message, consumes it, and returns its reply. No match
left -> ScriptExhausted.

Script file format (structured text): entries separated by lines of the
form `--- when: <matcher>`; everything until the next separator is the
reply, stripped of surrounding blank lines. Lines starting with `#`
before the first separator are comments.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from pathlib import Path

from ..errors import ScriptExhausted
from .messages import ChatMessage, CompletionRequest

SEPARATOR = "--- when:"


@dataclass
class ScriptEntry:
    matcher: str  # substring, or "*" for wildcard
    reply: str

    def matches(self, text: str) -> bool:
        return self.matcher == "*" or self.matcher.lower() in text.lower()


class ScriptedChatBackend:
    """Replays canned assistant replies keyed by the latest input message."""

    def __init__(self, entries: list[ScriptEntry]):
        self._entries = list(entries)
        self._consumed = [False] * len(entries)
        self._lock = threading.Lock()

    @classmethod
    def from_pairs(cls, pairs: list[tuple[str, str]]) -> "ScriptedChatBackend":
        return cls([ScriptEntry(m, r) for m, r in pairs])

    @classmethod
    def from_file(cls, path) -> "ScriptedChatBackend":
        return cls(parse_script(Path(path).read_text(encoding="utf-8")))

    def complete(self, request: CompletionRequest) -> ChatMessage:
        key = request.latest_input_text()
        with self._lock:
            for i, entry in enumerate(self._entries):
                if not self._consumed[i] and entry.matches(key):
                    self._consumed[i] = True
                    return ChatMessage(role="assistant", text=entry.reply)
        raise ScriptExhausted(f"no scripted reply matches input: {key[:120]!r}")

    @property
    def remaining(self) -> int:
        with self._lock:
            return self._consumed.count(False)


def parse_script(text: str) -> list[ScriptEntry]:
    entries: list[ScriptEntry] = []
    matcher = None
    lines: list[str] = []

    def flush():
        if matcher is not None:
            entries.append(ScriptEntry(matcher, "\n".join(lines).strip("\n")))

    for line in text.splitlines():
        if line.startswith(SEPARATOR):
            flush()
            matcher = line[len(SEPARATOR):].strip()
            lines = []
        elif matcher is None:
            if line.strip() and not line.lstrip().startswith("#"):
                raise ValueError(f"script content before first separator: {line!r}")
        else:
            lines.append(line)
    flush()
    return entries
