"""Offline evaluation harness: replay the demo cases as golden runs.

Each case directory holds a case.json naming a scenario, a scripted
backend transcript, corpora directories and a chat request, plus
assertions on the answer and the recorded trace. Everything runs
in-process: the plant gateway is mounted through a test transport, the
store is embedded, and the chat backend replays the script, so a suite
run needs no network and no model.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from .agents.tools import SimClient
from .corpus.docs import split_docs
from .corpus.methods import parse_methods
from .extraction.extract import load_fewshot_examples
from .gateway import create_sim_app
from .models.embedder import HashedBagOfWordsEmbedder
from .models.scripted import ScriptedChatBackend
from .service import AssistantContext, create_assistant_app
from .sim.plant import Plant
from .sim.render import render_panel
from .sim.scenario_io import load_scenario
from .ingest import ingest_code, ingest_docs
from .store.memstore import EmbeddedVectorStore
import base64


@dataclass
class OfflineAssistant:
    """Fully wired in-process assistant stack for one scripted run."""

    plant: Plant
    ctx: AssistantContext
    client: TestClient

    def chat(self, payload: dict) -> dict:
        resp = self.client.post("/api/v1/chat", json=payload)
        body = resp.json()
        body["_status"] = resp.status_code
        return body


def build_offline_assistant(
    scenario_path,
    script_path,
    docs_dir,
    code_dir,
    fewshot_dir,
    journal_path=None,
) -> OfflineAssistant:
    plant = Plant(load_scenario(scenario_path))
    sim_client = SimClient("http://sim", client=TestClient(create_sim_app(plant)))

    embedder = HashedBagOfWordsEmbedder()
    store = EmbeddedVectorStore(path=None)
    ingest_docs(store, split_docs(docs_dir), embedder)
    ingest_code(store, parse_methods(code_dir), embedder)

    ctx = AssistantContext.build(
        chat_backend=ScriptedChatBackend.from_file(script_path),
        store=store,
        embedder=embedder,
        sim_client=sim_client,
        fewshot_examples=load_fewshot_examples(fewshot_dir),
        journal_path=journal_path,
    )
    return OfflineAssistant(
        plant=plant, ctx=ctx, client=TestClient(create_assistant_app(ctx))
    )


@dataclass
class CaseResult:
    name: str
    passed: bool
    failures: list[str] = field(default_factory=list)
    answer: str = ""
    trace: dict = field(default_factory=dict)


def _check(case: dict, body: dict) -> list[str]:
    failures: list[str] = []
    if body.get("_status") != 200:
        return [f"chat returned {body.get('_status')}: {body.get('error')}"]
    answer = body["answer"]
    trace = body["trace"]
    expect = case.get("expect", {})

    for needle in expect.get("answer_contains", []):
        if needle not in answer:
            failures.append(f"answer missing {needle!r}")

    calls = [s["action"] for s in trace["steps"] if s.get("action")]
    tool_names = [c["tool"] for c in calls]
    for tool in expect.get("tools_include", []):
        if tool not in tool_names:
            failures.append(f"trace has no {tool} call")

    for tool, needle in expect.get("observations_include", {}).items():
        obs = [
            s["observation"]
            for s in trace["steps"]
            if s.get("action") and s["action"]["tool"] == tool
        ]
        if not any(needle in (o or "") for o in obs):
            failures.append(f"no {tool} observation containing {needle!r}")

    visits = [
        c["arguments"].get("method_name")
        for c in calls
        if c["tool"] == "query_codebase_by_method"
    ]
    expected_visits = expect.get("method_visits")
    if expected_visits is not None and visits != expected_visits:
        failures.append(f"method visit order {visits} != {expected_visits}")
    return failures


def run_case(case_dir) -> CaseResult:
    case_dir = Path(case_dir)
    case = json.loads((case_dir / "case.json").read_text(encoding="utf-8"))

    def resolve(key):
        return (case_dir / case[key]).resolve()

    assistant = build_offline_assistant(
        scenario_path=resolve("scenario"),
        script_path=resolve("script"),
        docs_dir=resolve("docs"),
        code_dir=resolve("code"),
        fewshot_dir=resolve("fewshot"),
    )

    request = case["request"]
    payload = {"text": request["text"]}
    focus = request.get("attachment_focus")
    if focus:
        panel = render_panel(assistant.plant.snapshot(), focus=focus, size=(800, 600))
        payload["attachment"] = base64.b64encode(panel.to_png_bytes()).decode("ascii")
        payload["attachment_kind"] = request.get("attachment_kind", "panel")

    body = assistant.chat(payload)
    failures = _check(case, body)
    return CaseResult(
        name=case.get("name", case_dir.name),
        passed=not failures,
        failures=failures,
        answer=body.get("answer", ""),
        trace=body.get("trace", {}),
    )


def run_suite(suite_dir) -> list[CaseResult]:
    suite_dir = Path(suite_dir)
    case_dirs = sorted(d for d in suite_dir.iterdir() if (d / "case.json").is_file())
    if not case_dirs:
        raise FileNotFoundError(f"no case.json files under {suite_dir}")
    return [run_case(d) for d in case_dirs]
