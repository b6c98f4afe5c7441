"""Embedded in-process vector store with append-only journal persistence.

Journal format: a stream of length-prefixed entries. Each entry is a
4-byte big-endian payload length followed by that many bytes of UTF-8
JSON: {"op": "insert", "collection": c, "record": {..., "embeddings":
[floats]}} or {"op": "clear", "collection": c}. Replayed in order at
open, so the on-disk state is exactly the insert/clear history.

Search is an exhaustive cosine scan (the corpus is desk-scale), ranked
by (similarity desc, insertion index asc) so results are deterministic.
"""

from __future__ import annotations

import json
import os
import struct
import threading
from pathlib import Path
from typing import Optional

import numpy as np

from ..errors import EmbedderFailure, EmptyCollection
from ..models.embedder import cosine_similarity
from .base import SearchHit, VectorStore

_LEN = struct.Struct(">I")


class EmbeddedVectorStore(VectorStore):
    def __init__(self, path: Optional[str] = None):
        self._lock = threading.RLock()
        self._collections: dict[str, list[dict]] = {}
        self._path = Path(path) if path else _env_path()
        if self._path and self._path.exists():
            self._replay()

    # --- journal ---

    def _replay(self) -> None:
        with open(self._path, "rb") as fh:
            while True:
                header = fh.read(_LEN.size)
                if not header:
                    break
                (length,) = _LEN.unpack(header)
                entry = json.loads(fh.read(length).decode("utf-8"))
                self._apply(entry)

    def _apply(self, entry: dict) -> None:
        if entry["op"] == "insert":
            record = dict(entry["record"])
            record["embeddings"] = np.asarray(record["embeddings"], dtype=np.float64)
            self._collections.setdefault(entry["collection"], []).append(record)
        elif entry["op"] == "clear":
            self._collections[entry["collection"]] = []

    def _journal(self, entry: dict) -> None:
        if not self._path:
            return
        if "record" in entry:
            entry = dict(entry)
            record = dict(entry["record"])
            record["embeddings"] = [float(x) for x in record["embeddings"]]
            entry["record"] = record
        payload = json.dumps(entry).encode("utf-8")
        with open(self._path, "ab") as fh:
            fh.write(_LEN.pack(len(payload)))
            fh.write(payload)

    # --- store interface ---

    def populate_db(self, collection: str, records: list, embedder) -> int:
        inserted = 0
        failures: list[tuple[dict, Exception]] = []
        with self._lock:
            for rec in records:
                payload = rec.payload() if hasattr(rec, "payload") else dict(rec)
                try:
                    vec = embedder.embed([payload["data"]])[0]
                except Exception as exc:  # noqa: BLE001 - reported, not swallowed
                    failures.append((payload, exc))
                    continue
                stored = dict(payload)
                stored["embeddings"] = vec
                self._collections.setdefault(collection, []).append(stored)
                self._journal({"op": "insert", "collection": collection, "record": stored})
                inserted += 1
        if failures:
            raise EmbedderFailure(inserted, failures)
        return inserted

    def count(self, collection: str) -> int:
        with self._lock:
            return len(self._collections.get(collection, []))

    def clear_db(self, collection: str) -> None:
        with self._lock:
            self._collections[collection] = []
            self._journal({"op": "clear", "collection": collection})

    def _hits(self, collection: str) -> list[SearchHit]:
        records = self._collections.get(collection, [])
        return [
            SearchHit(record={k: v for k, v in r.items() if k != "embeddings"},
                      score=0.0, index=i)
            for i, r in enumerate(records)
        ]

    def semantic_search(self, collection: str, query: str, embedder, n: int = 3) -> list[SearchHit]:
        if n <= 0:
            raise ValueError("n must be positive")
        with self._lock:
            records = self._collections.get(collection, [])
            if not records:
                raise EmptyCollection(collection)
            return self._rank(records, list(range(len(records))), query, embedder, n)

    def _rank(self, records, indices, query, embedder, n) -> list[SearchHit]:
        qvec = embedder.embed([query])[0]
        hits = [
            SearchHit(
                record={k: v for k, v in records[i].items() if k != "embeddings"},
                score=cosine_similarity(qvec, records[i]["embeddings"]),
                index=i,
            )
            for i in indices
        ]
        hits.sort(key=lambda h: (-h.score, h.index))
        return hits[:n]

    # --- code-collection filtered searches ---

    def file_name_search(self, collection: str, file_name: str) -> list[SearchHit]:
        with self._lock:
            return [h for h in self._hits(collection) if h.record.get("file_name") == file_name]

    def method_name_search(self, collection: str, method_name: str) -> list[SearchHit]:
        with self._lock:
            return [h for h in self._hits(collection) if h.record.get("method_name") == method_name]

    def multi_filter_search(
        self,
        collection: str,
        embedder=None,
        file_name: Optional[str] = None,
        method_name: Optional[str] = None,
        query: Optional[str] = None,
        n: int = 3,
    ) -> list[SearchHit]:
        with self._lock:
            records = self._collections.get(collection, [])
            indices = [
                i
                for i, r in enumerate(records)
                if (file_name is None or r.get("file_name") == file_name)
                and (method_name is None or r.get("method_name") == method_name)
            ]
            if query is None:
                return [
                    SearchHit(
                        record={k: v for k, v in records[i].items() if k != "embeddings"},
                        score=0.0,
                        index=i,
                    )
                    for i in indices
                ]
            if not records:
                raise EmptyCollection(collection)
            return self._rank(records, indices, query, embedder, n)


def _env_path() -> Optional[Path]:
    env = os.environ.get("DB_PATH")
    return Path(env) if env else None
