"""Corpus-to-store ingestion: chunkers feed the two collections."""

from __future__ import annotations

from .corpus.docs import DocPage
from .corpus.methods import MethodChunk
from .store.base import CODE, DOCS, CodeRecord, DocRecord


def doc_record(page: DocPage) -> DocRecord:
    # topic line stays with the body so searches hit the heading words too
    return DocRecord(data=f"{page.topic}\n\n{page.text}")


def code_record(chunk: MethodChunk) -> CodeRecord:
    return CodeRecord(
        file_name=chunk.file_name, method_name=chunk.method_name, data=chunk.code
    )


def ingest_docs(store, pages: list[DocPage], embedder) -> int:
    return store.populate_db(DOCS, [doc_record(p) for p in pages], embedder)


def ingest_code(store, chunks: list[MethodChunk], embedder) -> int:
    return store.populate_db(CODE, [code_record(c) for c in chunks], embedder)
