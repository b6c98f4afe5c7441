from .base import CODE, DOCS, CodeRecord, DocRecord, SearchHit, VectorStore
from .memstore import EmbeddedVectorStore

__all__ = [
    "CODE",
    "DOCS",
    "CodeRecord",
    "DocRecord",
    "SearchHit",
    "VectorStore",
    "EmbeddedVectorStore",
]
