"""Deterministic local embedder: hashed bag of words.

Lowercase, split on non-alphanumerics, hash each token (md5, stable
across processes) into one of 256 buckets, count, L2-normalize. The
empty string maps to the all-zeros vector — the documented
zero-information constant — rather than raising.
"""

from __future__ import annotations

import hashlib
import re

import numpy as np

TOKEN = re.compile(r"[a-z0-9]+")


class HashedBagOfWordsEmbedder:
    dimension = 256

    def _bucket(self, token: str) -> int:
        digest = hashlib.md5(token.encode("utf-8")).digest()
        return int.from_bytes(digest[:4], "big") % self.dimension

    def embed_one(self, text: str) -> np.ndarray:
        vec = np.zeros(self.dimension, dtype=np.float64)
        for token in TOKEN.findall(text.lower()):
            vec[self._bucket(token)] += 1.0
        norm = np.linalg.norm(vec)
        if norm > 0:
            vec /= norm
        return vec

    def embed(self, texts: list[str]) -> list[np.ndarray]:
        if not texts:
            raise ValueError("embed requires a non-empty list")
        return [self.embed_one(t) for t in texts]


def cosine_similarity(a: np.ndarray, b: np.ndarray) -> float:
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0 or nb == 0:
        return 0.0
    return float(np.dot(a, b) / (na * nb))
