"""Shared fixtures: corpus paths, a loaded demo plant, wired stores."""

from __future__ import annotations

import warnings
from pathlib import Path

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient  # noqa: F401  (re-exported)

from copilot.models.embedder import HashedBagOfWordsEmbedder
from copilot.sim.plant import Plant
from copilot.sim.scenario_io import load_scenario

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def demo_scenario():
    return load_scenario(FIXTURES / "scenarios" / "fsve-demo.scn")


@pytest.fixture()
def demo_plant(demo_scenario):
    return Plant(demo_scenario)


@pytest.fixture(scope="session")
def embedder():
    return HashedBagOfWordsEmbedder()


@pytest.fixture(scope="session")
def doc_pages(fixtures_dir):
    from copilot.corpus.docs import split_docs

    return split_docs(fixtures_dir / "docs")


@pytest.fixture(scope="session")
def code_chunks(fixtures_dir):
    from copilot.corpus.methods import parse_methods

    return parse_methods(fixtures_dir / "code")


@pytest.fixture()
def populated_store(doc_pages, code_chunks, embedder):
    from copilot.ingest import ingest_code, ingest_docs
    from copilot.store.memstore import EmbeddedVectorStore

    store = EmbeddedVectorStore(path=None)
    ingest_docs(store, doc_pages, embedder)
    ingest_code(store, code_chunks, embedder)
    return store


@pytest.fixture()
def sim_client(demo_plant):
    from copilot.agents.tools import SimClient
    from copilot.gateway import create_sim_app

    return SimClient("http://sim", client=TestClient(create_sim_app(demo_plant)))


@pytest.fixture()
def registry(populated_store, embedder, sim_client):
    from copilot.agents.tools import register_tools

    return register_tools(populated_store, embedder, sim_client)
