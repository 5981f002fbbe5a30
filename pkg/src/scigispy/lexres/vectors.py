"""Word-vector files, cosine similarity, and the sentence-embedding sources
consumed by the cohesion indices.

Two interchangeable embedding sources exist: averaging word vectors over
the text, and looking vectors up in a precomputed sidecar keyed by
(doc_id, sentence index).  Both return fixed-dimension float vectors and
are deterministic for a given input.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..corpus import PUNCT, word_surfaces
from ..errors import DataError

log = logging.getLogger(__name__)


@dataclass
class WordVectors:
    dim: int
    vectors: dict[str, np.ndarray]

    def get(self, word: str):
        return self.vectors.get(word.lower())

    def __len__(self):
        return len(self.vectors)


def load_word_vectors(path) -> WordVectors:
    """Load a text vector file: header "V D", then V lines of
    "word x1 ... xD".  Duplicate words keep the last occurrence (with a
    warning); a line with the wrong component count is an error."""
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise DataError(f"{path}: line 1: expected header 'V D'")
        try:
            declared, dim = int(header[0]), int(header[1])
        except ValueError as exc:
            raise DataError(f"{path}: line 1: expected integer header 'V D'") from exc
        if dim <= 0:
            raise DataError(f"{path}: line 1: dimension must be positive")
        vectors: dict[str, np.ndarray] = {}
        read = 0
        for lineno, line in enumerate(fh, 2):
            if not line.strip():
                continue
            parts = line.split()
            word, components = parts[0].lower(), parts[1:]
            if len(components) != dim:
                raise DataError(
                    f"{path}: line {lineno}: expected {dim} components, got {len(components)}"
                )
            try:
                vec = np.array([float(x) for x in components], dtype=np.float64)
            except ValueError as exc:
                raise DataError(f"{path}: line {lineno}: non-numeric component") from exc
            if not np.isfinite(vec).all():
                raise DataError(f"{path}: line {lineno}: non-finite component")
            if word in vectors:
                log.warning("%s: line %d: duplicate word %r, keeping last", path, lineno, word)
            vectors[word] = vec
            read += 1
    if read != declared:
        log.warning("%s: header declared %d vectors, file had %d lines", path, declared, read)
    return WordVectors(dim=dim, vectors=vectors)


def cosine_checked(u, v) -> tuple[float, bool]:
    """Cosine similarity plus a degeneracy flag; a zero-norm operand yields
    (0.0, True).  The value is clamped into [-1, 1]."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    nu = float(np.dot(u, u)) ** 0.5
    nv = float(np.dot(v, v)) ** 0.5
    if nu == 0.0 or nv == 0.0:
        return 0.0, True
    value = float(np.dot(u, v)) / (nu * nv)
    return max(-1.0, min(1.0, value)), False


def cosine(u, v) -> float:
    return cosine_checked(u, v)[0]


def sentence_embedding_avg(wv: WordVectors, tokens) -> tuple[np.ndarray, bool]:
    """Mean word vector over the in-vocabulary, non-punctuation tokens of a
    sentence.  All tokens out of vocabulary yields (zero vector, True)."""
    vecs = []
    for token in tokens:
        if token.pos == PUNCT:
            continue
        vec = wv.get(token.surface)
        if vec is not None:
            vecs.append(vec)
    if not vecs:
        return np.zeros(wv.dim, dtype=np.float64), True
    return np.mean(np.stack(vecs), axis=0), False


class WordVectorSource:
    """Sentence embeddings as the average word vector of a text's word
    tokens; matches sentence_embedding_avg on the sentence's own tokens."""

    def __init__(self, wv: WordVectors):
        self.wv = wv
        self.dim = wv.dim

    def embed(self, doc_id, sent_index, text):
        vecs = []
        for word in word_surfaces(text):
            vec = self.wv.get(word)
            if vec is not None:
                vecs.append(vec)
        if not vecs:
            return np.zeros(self.dim, dtype=np.float64)
        return np.mean(np.stack(vecs), axis=0)


class SidecarSource:
    """Sentence embeddings looked up from a precomputed sidecar file,
    keyed by (doc_id, sentence index); the text argument is ignored."""

    def __init__(self, records: dict[tuple[str, int], np.ndarray], dim: int):
        self.records = records
        self.dim = dim

    def embed(self, doc_id, sent_index, text):
        key = (doc_id, sent_index)
        vec = self.records.get(key)
        if vec is None:
            raise DataError(f"sidecar has no vector for document {doc_id!r} sentence {sent_index}")
        return vec


def load_sidecar(path) -> SidecarSource:
    """Load a sidecar: one JSON object per line with fields doc_id (str),
    sent (0-based int) and vec (list of numbers); '#' comment lines are
    allowed.  All vectors must share one dimension."""
    path = Path(path)
    records: dict[tuple[str, int], np.ndarray] = {}
    dim = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                obj = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise DataError(f"{path}: line {lineno}: invalid JSON ({exc.msg})") from exc
            try:
                doc_id = obj["doc_id"]
                sent = int(obj["sent"])
                vec = obj["vec"]
            except (KeyError, TypeError, ValueError) as exc:
                raise DataError(f"{path}: line {lineno}: expected doc_id/sent/vec fields") from exc
            if not isinstance(doc_id, str) or not isinstance(vec, list):
                raise DataError(f"{path}: line {lineno}: expected doc_id/sent/vec fields")
            if dim is None:
                dim = len(vec)
                if dim == 0:
                    raise DataError(f"{path}: line {lineno}: empty vector")
            elif len(vec) != dim:
                raise DataError(f"{path}: line {lineno}: dimension {len(vec)} != {dim}")
            key = (doc_id, sent)
            if key in records:
                raise DataError(f"{path}: line {lineno}: duplicate record for {doc_id!r}/{sent}")
            try:
                records[key] = np.array(vec, dtype=np.float64)
            except (TypeError, ValueError) as exc:
                raise DataError(f"{path}: line {lineno}: non-numeric vector component") from exc
    if not records:
        raise DataError(f"{path}: no records")
    return SidecarSource(records=records, dim=dim)
