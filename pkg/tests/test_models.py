"""Chat/embedding backends: message types, deterministic embedder,
scripted replay, and the remote client against a stub HTTP server."""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copilot.errors import BackendUnavailable, BadResponse, ScriptExhausted
from copilot.models.embedder import HashedBagOfWordsEmbedder, cosine_similarity
from copilot.models.messages import ChatMessage, CompletionRequest
from copilot.models.remote import RemoteChatBackend, RemoteEmbedder
from copilot.models.scripted import ScriptedChatBackend, parse_script
from copilot.raster import RasterImage


class TestMessages:
    def test_tool_role_requires_tool_name(self):
        with pytest.raises(ValueError):
            ChatMessage(role="tool", text="result")
        msg = ChatMessage(role="tool", text="result", tool_name="query_documentation")
        assert msg.tool_name == "query_documentation"

    def test_unknown_role_rejected(self):
        with pytest.raises(ValueError):
            ChatMessage(role="oracle", text="x")

    def test_request_needs_messages(self):
        with pytest.raises(ValueError):
            CompletionRequest(messages=[])

    def test_request_bounds(self):
        msg = [ChatMessage(role="user", text="hi")]
        with pytest.raises(ValueError):
            CompletionRequest(messages=msg, temperature=-0.1)
        with pytest.raises(ValueError):
            CompletionRequest(messages=msg, max_tokens=0)

    def test_latest_input_text_skips_assistant(self):
        req = CompletionRequest(
            messages=[
                ChatMessage(role="user", text="first"),
                ChatMessage(role="assistant", text="reply"),
                ChatMessage(role="tool", text="obs", tool_name="t"),
            ]
        )
        assert req.latest_input_text() == "obs"


class TestEmbedder:
    def test_deterministic_and_unit_norm(self, embedder):
        a = embedder.embed_one("frontend status code ten")
        b = embedder.embed_one("frontend status code ten")
        assert np.array_equal(a, b)
        assert np.linalg.norm(a) == pytest.approx(1.0)

    def test_dimension_constant(self, embedder):
        assert embedder.dimension == 256
        for text in ("a", "many different words entirely"):
            assert embedder.embed_one(text).shape == (256,)

    def test_empty_string_is_zero_vector(self, embedder):
        assert not embedder.embed_one("").any()
        assert not embedder.embed_one("  !!  ").any()

    def test_case_and_separator_insensitive(self, embedder):
        assert np.array_equal(
            embedder.embed_one("Frontend-Status"), embedder.embed_one("frontend status")
        )

    def test_embed_requires_nonempty_list(self, embedder):
        with pytest.raises(ValueError):
            embedder.embed([])

    def test_frozen_similarity_regression(self, embedder):
        # frozen from the hashed bag-of-words definition: two of the three
        # tokens shared gives 2/sqrt(2*3); disjoint tokens give 0
        base = embedder.embed_one("frontend status")
        near = embedder.embed_one("frontend status codes")
        far = embedder.embed_one("widget colour legend")
        assert cosine_similarity(base, near) == pytest.approx(0.8164965809, abs=1e-9)
        assert cosine_similarity(base, far) == 0.0
        assert cosine_similarity(base, near) > cosine_similarity(base, far)

    @settings(max_examples=100, deadline=None)
    @given(a=st.text(max_size=40), b=st.text(max_size=40))
    def test_cosine_symmetry_and_bounds(self, a, b):
        e = HashedBagOfWordsEmbedder()
        va, vb = e.embed_one(a), e.embed_one(b)
        sim = cosine_similarity(va, vb)
        assert sim == cosine_similarity(vb, va)
        assert -1.0 - 1e-9 <= sim <= 1.0 + 1e-9


def _user(text):
    return CompletionRequest(messages=[ChatMessage(role="user", text=text)])


class TestScriptedBackend:
    def test_substring_match_case_insensitive(self):
        backend = ScriptedChatBackend.from_pairs([("decode", "R")])
        assert backend.complete(_user("Please DECODE this")).text == "R"

    def test_no_match_raises(self):
        backend = ScriptedChatBackend.from_pairs([("decode", "R")])
        with pytest.raises(ScriptExhausted):
            backend.complete(_user("unrelated"))

    def test_entries_consumed_once(self):
        backend = ScriptedChatBackend.from_pairs([("hi", "one"), ("hi", "two")])
        assert backend.complete(_user("hi")).text == "one"
        assert backend.complete(_user("hi")).text == "two"
        with pytest.raises(ScriptExhausted):
            backend.complete(_user("hi"))

    def test_scan_forward_skips_consumed_only(self):
        backend = ScriptedChatBackend.from_pairs(
            [("alpha", "A"), ("beta", "B"), ("alpha", "A2")]
        )
        assert backend.complete(_user("beta")).text == "B"
        assert backend.complete(_user("alpha")).text == "A"
        assert backend.complete(_user("alpha")).text == "A2"
        assert backend.remaining == 0

    def test_wildcard(self):
        backend = ScriptedChatBackend.from_pairs([("*", "anything goes")])
        assert backend.complete(_user("zzz")).text == "anything goes"

    def test_matches_latest_user_or_tool_message(self):
        backend = ScriptedChatBackend.from_pairs([("observation", "seen")])
        req = CompletionRequest(
            messages=[
                ChatMessage(role="user", text="decode please"),
                ChatMessage(role="assistant", text="Action: t"),
                ChatMessage(role="tool", text="the observation", tool_name="t"),
            ]
        )
        assert backend.complete(req).text == "seen"

    def test_parse_script_format(self):
        text = (
            "# comment header\n"
            "--- when: first\n"
            "reply one\nspans lines\n"
            "--- when: *\n"
            "reply two\n"
        )
        entries = parse_script(text)
        assert [(e.matcher, e.reply) for e in entries] == [
            ("first", "reply one\nspans lines"),
            ("*", "reply two"),
        ]

    def test_parse_script_rejects_leading_content(self):
        with pytest.raises(ValueError):
            parse_script("stray text\n--- when: x\nr\n")

    def test_fixture_scripts_parse(self, fixtures_dir):
        for path in sorted((fixtures_dir / "scripts").glob("*.script")):
            backend = ScriptedChatBackend.from_file(path)
            assert backend.remaining > 0


class _StubHandler(BaseHTTPRequestHandler):
    chat_body = {
        "choices": [{"message": {"role": "assistant", "content": "canned text"}}]
    }
    embed_body = {"data": [{"embedding": [0.1, 0.2, 0.3]}]}
    captured: list[dict] = []
    status = 200

    def do_POST(self):
        length = int(self.headers["Content-Length"])
        payload = json.loads(self.rfile.read(length))
        type(self).captured.append({"path": self.path, "payload": payload})
        body = self.chat_body if self.path.endswith("/chat/completions") else self.embed_body
        raw = json.dumps(body).encode()
        self.send_response(self.status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(raw)))
        self.end_headers()
        self.wfile.write(raw)

    def log_message(self, *args):
        pass


@pytest.fixture()
def stub_server():
    _StubHandler.captured = []
    _StubHandler.status = 200
    server = HTTPServer(("127.0.0.1", 0), _StubHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_port}", _StubHandler
    server.shutdown()
    thread.join()


class TestRemoteBackends:
    def test_chat_round_trip(self, stub_server):
        url, handler = stub_server
        backend = RemoteChatBackend(base_url=url, api_key="k", model="m")
        reply = backend.complete(_user("hello"))
        assert reply.role == "assistant"
        assert reply.text == "canned text"
        sent = handler.captured[-1]["payload"]
        assert sent["model"] == "m"
        assert sent["messages"] == [{"role": "user", "content": "hello"}]

    def test_images_sent_as_png_data_urls(self, stub_server):
        url, handler = stub_server
        backend = RemoteChatBackend(base_url=url, model="m")
        img = RasterImage.from_array(np.zeros((2, 2, 3), dtype=np.uint8))
        backend.complete(
            CompletionRequest(
                messages=[ChatMessage(role="user", text="look", images=[img])]
            )
        )
        content = handler.captured[-1]["payload"]["messages"][0]["content"]
        assert content[0] == {"type": "text", "text": "look"}
        assert content[1]["image_url"]["url"].startswith("data:image/png;base64,")

    def test_embedding_round_trip(self, stub_server):
        url, _ = stub_server
        embedder = RemoteEmbedder(base_url=url, model="e")
        vectors = embedder.embed(["probe"])
        assert np.allclose(vectors[0], [0.1, 0.2, 0.3])
        assert embedder.dimension == 3

    def test_http_error_maps_to_backend_unavailable(self, stub_server):
        url, handler = stub_server
        handler.status = 500
        backend = RemoteChatBackend(base_url=url)
        with pytest.raises(BackendUnavailable):
            backend.complete(_user("x"))

    def test_unreachable_host_maps_to_backend_unavailable(self):
        backend = RemoteChatBackend(base_url="http://127.0.0.1:1")
        with pytest.raises(BackendUnavailable):
            backend.complete(_user("x"))

    def test_malformed_body_maps_to_bad_response(self, stub_server):
        url, handler = stub_server
        original = handler.chat_body
        handler.chat_body = {"nonsense": True}
        try:
            backend = RemoteChatBackend(base_url=url)
            with pytest.raises(BadResponse):
                backend.complete(_user("x"))
        finally:
            handler.chat_body = original

    def test_missing_base_url_env(self, monkeypatch):
        monkeypatch.delenv("MODEL_BASE_URL", raising=False)
        with pytest.raises(BackendUnavailable):
            RemoteChatBackend()
