"""Command line entry points.

Exit codes: 0 success, 1 user error (bad input, failed assertions),
2 internal error. Failure messages are single lines prefixed with
"error:" so they stay machine parseable.
"""

from __future__ import annotations

import base64
import os
import sys

import click

from .errors import CopilotError
from .fixture_paths import fixtures_root


def _fail(message: str, code: int = 1):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


@click.group()
def main():
    """Operator assistant tooling: ingestion, serving, rendering, evaluation."""


def _open_store(db_path):
    from .store.memstore import EmbeddedVectorStore

    return EmbeddedVectorStore(path=db_path or os.environ.get("DB_PATH"))


def _embedder():
    from .models.embedder import HashedBagOfWordsEmbedder

    return HashedBagOfWordsEmbedder()


@main.command("ingest-docs")
@click.argument("source_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--db", "db_path", default=None, help="journal file (default: DB_PATH env)")
def ingest_docs_cmd(source_dir, db_path):
    """Split documentation into pages and populate the docs collection."""
    from .corpus.docs import split_docs
    from .ingest import ingest_docs
    from .store.base import DOCS

    store = _open_store(db_path)
    try:
        pages = split_docs(source_dir)
        store.clear_db(DOCS)
        count = ingest_docs(store, pages, _embedder())
    except CopilotError as exc:
        _fail(str(exc))
    click.echo(f"ingested {count} documentation pages")


@main.command("ingest-code")
@click.argument("source_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--db", "db_path", default=None, help="journal file (default: DB_PATH env)")
def ingest_code_cmd(source_dir, db_path):
    """Parse methods out of the code corpus and populate the code collection."""
    from .corpus.methods import parse_methods
    from .ingest import ingest_code
    from .store.base import CODE

    store = _open_store(db_path)
    try:
        chunks = parse_methods(source_dir)
        store.clear_db(CODE)
        count = ingest_code(store, chunks, _embedder())
    except CopilotError as exc:
        _fail(str(exc))
    click.echo(f"ingested {count} method chunks")


@main.command("serve-sim")
@click.option("--scenario", "scenario_path", required=True, type=click.Path(exists=True))
@click.option("--bind", default=None, help="host:port (default: SIM_BIND or 127.0.0.1:8100)")
def serve_sim_cmd(scenario_path, bind):
    """Serve the seven widget-data routes over the given scenario."""
    from .gateway import serve
    from .sim.plant import Plant

    bind = bind or os.environ.get("SIM_BIND", "127.0.0.1:8100")
    try:
        plant = Plant.from_file(scenario_path)
    except CopilotError as exc:
        _fail(str(exc))
    serve(bind, plant)


@main.command("serve-assistant")
@click.option("--scenario", "scenario_path", type=click.Path(exists=True), default=None)
@click.option("--scripted", "script_path", type=click.Path(exists=True), default=None,
              help="run offline with a scripted chat backend")
@click.option("--bind", default=None, help="host:port (default: ASSISTANT_BIND or 127.0.0.1:8200)")
@click.option("--sessions", "sessions_path", default=None, help="session journal file")
def serve_assistant_cmd(scenario_path, script_path, bind, sessions_path):
    """Serve the assistant chat API (remote model, or --scripted for offline)."""
    import uvicorn

    from .agents.tools import SimClient
    from .extraction.extract import load_fewshot_examples
    from .models.remote import RemoteChatBackend
    from .models.scripted import ScriptedChatBackend
    from .service import AssistantContext, create_assistant_app

    if script_path:
        chat_backend = ScriptedChatBackend.from_file(script_path)
    elif os.environ.get("MODEL_BASE_URL"):
        chat_backend = RemoteChatBackend()
    else:
        _fail("set MODEL_BASE_URL or pass --scripted <script file>")

    root = fixtures_root()
    if scenario_path:
        # embed the plant gateway in-process
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            from fastapi.testclient import TestClient

        from .gateway import create_sim_app
        from .sim.plant import Plant

        try:
            plant = Plant.from_file(scenario_path)
        except CopilotError as exc:
            _fail(str(exc))
        sim_client = SimClient("http://sim", client=TestClient(create_sim_app(plant)))
    else:
        sim_base = os.environ.get("SIM_BASE_URL")
        if not sim_base:
            _fail("set SIM_BASE_URL or pass --scenario <file>")
        sim_client = SimClient(sim_base)

    store = _open_store(None)
    embedder = _embedder()
    ctx = AssistantContext.build(
        chat_backend=chat_backend,
        store=store,
        embedder=embedder,
        sim_client=sim_client,
        fewshot_examples=load_fewshot_examples(root / "fewshot"),
        journal_path=sessions_path,
    )
    app = create_assistant_app(ctx)
    bind = bind or os.environ.get("ASSISTANT_BIND", "127.0.0.1:8200")
    host, _, port = bind.rpartition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))


@main.command("render")
@click.option("--scenario", "scenario_path", required=True, type=click.Path(exists=True))
@click.option("--focus", default=None)
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--size", default="800x600", help="WIDTHxHEIGHT")
def render_cmd(scenario_path, focus, out_path, size):
    """Render a panel (or a single focused widget) to a PNG file."""
    from .sim.render import render_panel
    from .sim.scenario_io import load_scenario

    try:
        width, height = (int(v) for v in size.lower().split("x"))
        scenario = load_scenario(scenario_path)
        image = render_panel(scenario, focus=focus, size=(width, height))
    except (CopilotError, ValueError) as exc:
        _fail(str(exc))
    image.save_png(out_path)
    click.echo(f"wrote {out_path}")


@main.command("segment")
@click.argument("panel_png", type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
def segment_cmd(panel_png, out_path):
    """Cut the white-bounded widget out of a panel screenshot."""
    from .raster import RasterImage
    from .vision.ops import segment_widget

    try:
        result = segment_widget(RasterImage.load_png(panel_png))
    except (CopilotError, OSError) as exc:
        _fail(str(exc))
    result.image.save_png(out_path)
    click.echo(f"wrote {out_path} bbox={result.bbox} clipped={result.clipped}")


@main.command("upscale")
@click.argument("widget_png", type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--factor", default=4, type=int)
def upscale_cmd(widget_png, out_path, factor):
    """Upscale a widget image (nearest-neighbour)."""
    from .raster import RasterImage
    from .vision.ops import upscale

    try:
        image = upscale(RasterImage.load_png(widget_png), factor)
    except (CopilotError, OSError, ValueError) as exc:
        _fail(str(exc))
    image.save_png(out_path)
    click.echo(f"wrote {out_path} ({image.width}x{image.height})")


@main.command("ask")
@click.option("--widget", "widget_png", type=click.Path(exists=True), default=None)
@click.option("--text", required=True)
@click.option("--scripted", "script_path", required=True, type=click.Path(exists=True))
@click.option("--scenario", "scenario_path", type=click.Path(exists=True), default=None)
def ask_cmd(widget_png, text, script_path, scenario_path):
    """One-shot question against an embedded offline assistant."""
    from .evalsuite import build_offline_assistant

    root = fixtures_root()
    try:
        assistant = build_offline_assistant(
            scenario_path=scenario_path or root / "scenarios" / "fsve-demo.scn",
            script_path=script_path,
            docs_dir=root / "docs",
            code_dir=root / "code",
            fewshot_dir=root / "fewshot",
        )
    except CopilotError as exc:
        _fail(str(exc))
    payload = {"text": text}
    if widget_png:
        with open(widget_png, "rb") as fh:
            raw = fh.read()
        if not raw.startswith(b"\x89PNG"):
            _fail("bad image: not a PNG file")
        payload["attachment"] = base64.b64encode(raw).decode("ascii")
        payload["attachment_kind"] = "widget"
    body = assistant.chat(payload)
    if body["_status"] != 200:
        _fail(body.get("error", "chat failed"))
    click.echo(body["answer"])


@main.command("eval")
@click.option("--suite", "suite_dir", required=True, type=click.Path(exists=True, file_okay=False))
def eval_cmd(suite_dir):
    """Replay every suite case; nonzero exit when any case fails."""
    from .evalsuite import run_suite

    try:
        results = run_suite(suite_dir)
    except (CopilotError, FileNotFoundError) as exc:
        _fail(str(exc))
    failed = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        click.echo(f"{status}  {result.name}")
        for failure in result.failures:
            click.echo(f"      {failure}")
        failed += 0 if result.passed else 1
    click.echo(f"{len(results) - failed}/{len(results)} cases passed")
    if failed:
        sys.exit(1)


if __name__ == "__main__":
    main()
