"""Documentation splitter: one page per top-level markdown heading.

No token windows, no overlap: a page is everything from one `# ` heading
to the next, so each topic stays intact.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ..errors import EmptyCorpus


@dataclass(frozen=True)
class DocPage:
    topic: str
    text: str
    source: str = ""  # file the page came from


def split_text(text: str, source: str = "") -> list[DocPage]:
    pages: list[DocPage] = []
    topic = None
    lines: list[str] = []

    def flush():
        if topic is not None:
            body = "\n".join(lines).strip("\n")
            if body:
                pages.append(DocPage(topic=topic, text=body, source=source))

    for line in text.splitlines():
        if line.startswith("# "):
            flush()
            topic = line[2:].strip()
            lines = []
        elif topic is not None:
            lines.append(line)
    flush()
    return pages


def split_docs(source_dir) -> list[DocPage]:
    """Split every *.md file under source_dir; EmptyCorpus if nothing found."""
    source_dir = Path(source_dir)
    pages: list[DocPage] = []
    for path in sorted(source_dir.glob("*.md")):
        pages.extend(split_text(path.read_text(encoding="utf-8"), source=path.name))
    if not pages:
        raise EmptyCorpus(f"no documentation pages under {source_dir}")
    return pages
