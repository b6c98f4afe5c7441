"""Locate the shipped fixtures directory.

Fixtures (scenarios, corpora, tables, few-shot examples, eval suite) live
in `fixtures/` at the repository root. `COPILOT_FIXTURES` overrides the
location for deployments that relocate the data.
"""

import os
from pathlib import Path


def fixtures_root() -> Path:
    env = os.environ.get("COPILOT_FIXTURES")
    if env:
        return Path(env)
    # src/copilot/fixture_paths.py -> repo root is three levels up
    candidate = Path(__file__).resolve().parents[2] / "fixtures"
    if candidate.is_dir():
        return candidate
    raise FileNotFoundError(
        "fixtures directory not found; set COPILOT_FIXTURES"
    )
