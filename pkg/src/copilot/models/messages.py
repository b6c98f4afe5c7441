"""Chat message and completion request types shared by all backends."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..raster import RasterImage

ROLES = ("system", "user", "assistant", "tool")


@dataclass
class ChatMessage:
    role: str
    text: str
    images: list[RasterImage] = field(default_factory=list)
    tool_name: Optional[str] = None  # required when role == "tool"

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"unknown role: {self.role}")
        if self.role == "tool" and not self.tool_name:
            raise ValueError("tool messages must carry the producing tool's name")


@dataclass
class CompletionRequest:
    messages: list[ChatMessage]
    temperature: float = 0.0
    max_tokens: int = 2048

    def __post_init__(self):
        if not self.messages:
            raise ValueError("at least one message required")
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")
        if self.max_tokens <= 0:
            raise ValueError("max_tokens must be positive")

    def latest_input_text(self) -> str:
        """Text of the most recent user or tool message (matcher input for
        the scripted backend)."""
        for msg in reversed(self.messages):
            if msg.role in ("user", "tool"):
                return msg.text
        return ""
