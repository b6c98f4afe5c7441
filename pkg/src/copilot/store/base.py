"""Vector store interface and record types.

The store is deliberately abstract (populate / search / clear) so the
embedded implementation can be swapped for an external product without
touching callers.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np

DOCS = "docs"
CODE = "code"


@dataclass
class DocRecord:
    data: str
    embeddings: np.ndarray = None

    def payload(self) -> dict:
        return {"data": self.data}


@dataclass
class CodeRecord:
    file_name: str
    method_name: str
    data: str
    embeddings: np.ndarray = None

    def payload(self) -> dict:
        return {
            "file_name": self.file_name,
            "method_name": self.method_name,
            "data": self.data,
        }


@dataclass
class SearchHit:
    record: dict  # payload fields only, no embeddings
    score: float
    index: int  # insertion index, used for deterministic tie-breaks

    @property
    def data(self) -> str:
        return self.record["data"]


class VectorStore(ABC):
    @abstractmethod
    def populate_db(self, collection: str, records: list, embedder) -> int:
        """Embed each record's data and insert; returns inserted count."""

    @abstractmethod
    def semantic_search(self, collection: str, query: str, embedder, n: int = 3) -> list[SearchHit]:
        """Top-n records by cosine similarity, most similar first."""

    @abstractmethod
    def clear_db(self, collection: str) -> None:
        """Remove every record from the collection; idempotent."""
