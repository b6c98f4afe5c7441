"""Remote chat/embedding backends speaking an OpenAI-compatible protocol.

Configured through env vars MODEL_BASE_URL, MODEL_API_KEY, MODEL_NAME
and EMBED_MODEL_NAME. Images travel as base64 PNG data URLs inside the
message payload.
"""

from __future__ import annotations

import base64
import os

import httpx
import numpy as np

from ..errors import BackendUnavailable, BadResponse
from .messages import ChatMessage, CompletionRequest


def _env(name: str) -> str:
    val = os.environ.get(name)
    if not val:
        raise BackendUnavailable(f"{name} is not set")
    return val


def _wire_message(msg: ChatMessage) -> dict:
    if not msg.images:
        return {"role": msg.role, "content": msg.text}
    content: list[dict] = []
    if msg.text:
        content.append({"type": "text", "text": msg.text})
    for img in msg.images:
        b64 = base64.b64encode(img.to_png_bytes()).decode("ascii")
        content.append(
            {"type": "image_url", "image_url": {"url": f"data:image/png;base64,{b64}"}}
        )
    return {"role": msg.role, "content": content}


class RemoteChatBackend:
    def __init__(self, base_url=None, api_key=None, model=None, client=None):
        self.base_url = (base_url or _env("MODEL_BASE_URL")).rstrip("/")
        self.api_key = api_key or os.environ.get("MODEL_API_KEY", "")
        self.model = model or os.environ.get("MODEL_NAME", "default")
        self._client = client or httpx.Client(timeout=120.0)

    def complete(self, request: CompletionRequest) -> ChatMessage:
        payload = {
            "model": self.model,
            "messages": [_wire_message(m) for m in request.messages],
            "temperature": request.temperature,
            "max_tokens": request.max_tokens,
        }
        try:
            resp = self._client.post(
                f"{self.base_url}/chat/completions",
                json=payload,
                headers=self._headers(),
            )
        except httpx.HTTPError as exc:
            raise BackendUnavailable(str(exc)) from exc
        if resp.status_code != 200:
            raise BackendUnavailable(f"chat backend returned {resp.status_code}")
        try:
            text = resp.json()["choices"][0]["message"]["content"]
        except (KeyError, IndexError, ValueError) as exc:
            raise BadResponse(f"unexpected chat completion body: {exc}") from exc
        return ChatMessage(role="assistant", text=text)

    def _headers(self) -> dict:
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        return headers


class RemoteEmbedder:
    def __init__(self, base_url=None, api_key=None, model=None, client=None):
        self.base_url = (base_url or _env("MODEL_BASE_URL")).rstrip("/")
        self.api_key = api_key or os.environ.get("MODEL_API_KEY", "")
        self.model = model or os.environ.get("EMBED_MODEL_NAME", "default-embed")
        self._client = client or httpx.Client(timeout=120.0)
        self._dimension = None

    @property
    def dimension(self):
        if self._dimension is None:
            self._dimension = len(self.embed(["probe"])[0])
        return self._dimension

    def embed(self, texts: list[str]) -> list[np.ndarray]:
        if not texts:
            raise ValueError("embed requires a non-empty list")
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        try:
            resp = self._client.post(
                f"{self.base_url}/embeddings",
                json={"model": self.model, "input": texts},
                headers=headers,
            )
        except httpx.HTTPError as exc:
            raise BackendUnavailable(str(exc)) from exc
        if resp.status_code != 200:
            raise BackendUnavailable(f"embedding backend returned {resp.status_code}")
        try:
            data = resp.json()["data"]
            vectors = [np.asarray(item["embedding"], dtype=np.float64) for item in data]
        except (KeyError, ValueError) as exc:
            raise BadResponse(f"unexpected embeddings body: {exc}") from exc
        if len(vectors) != len(texts):
            raise BadResponse("embedding count does not match input count")
        return vectors
