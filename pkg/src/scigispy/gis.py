"""Corpus z-score normalization and weighted gist-inference formulas.

Raw indices are z-scored per index over the documents where the index is
available (population standard deviation).  A formula is a named set of
(index, coefficient) terms; the score of a document is the coefficient-
weighted sum of its z values, with unavailable indices contributing 0.

Two presets ship: "original_gispy" (seven terms) and "scigispy" (six
terms), both with unit coefficient magnitudes.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError, DataError
from .indices import (
    INDEX_NAMES,
    ChunkingParams,
    RawIndices,
    idx_msl,
    idx_pcdc,
    idx_pcref,
    idx_rating,
    idx_semantic_chunks,
    idx_smcaus_embed,
    idx_smcaus_wn,
    idx_wrdhyp_mean,
    idx_wrdhyp_norm,
    idx_wrdic,
)

PRESETS = {
    "original_gispy": {
        "pcref": 1.0,
        "pcdc": 1.0,
        "smcaus_e": 1.0,
        "smcaus_wn": -1.0,
        "pccnc": -1.0,
        "wrdimg": -1.0,
        "wrdhyp_mean": -1.0,
    },
    "scigispy": {
        "pcref_chunk": -1.0,
        "pcdc": 1.0,
        "smcaus_e": 1.0,
        "smcaus_wn": -1.0,
        "wrdic": -1.0,
        "msl": -1.0,
    },
}


@dataclass
class FormulaConfig:
    name: str
    terms: dict[str, float]

    def __post_init__(self):
        for index_name, coefficient in self.terms.items():
            if index_name not in INDEX_NAMES:
                raise ConfigError(f"formula {self.name!r}: unknown index {index_name!r}")
            if not math.isfinite(coefficient):
                raise ConfigError(f"formula {self.name!r}: non-finite coefficient for {index_name!r}")


def preset(name: str) -> FormulaConfig:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r} (available: {', '.join(sorted(PRESETS))})")
    return FormulaConfig(name=name, terms=dict(PRESETS[name]))


def load_formula(spec: str) -> FormulaConfig:
    """Resolve a formula argument: a preset name, or a path to a JSON file
    {"name": ..., "terms": {index: coefficient}}."""
    if spec in PRESETS:
        return preset(spec)
    path = Path(spec)
    if not path.is_file():
        raise ConfigError(f"formula {spec!r} is neither a preset nor a readable file")
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: invalid JSON ({exc.msg})") from exc
    if not isinstance(obj, dict) or "terms" not in obj or not isinstance(obj["terms"], dict):
        raise DataError(f"{path}: expected an object with a 'terms' mapping")
    terms = {}
    for index_name, coefficient in obj["terms"].items():
        if not isinstance(coefficient, (int, float)):
            raise DataError(f"{path}: coefficient for {index_name!r} is not a number")
        terms[index_name] = float(coefficient)
    return FormulaConfig(name=str(obj.get("name", path.stem)), terms=terms)


@dataclass
class IndexStats:
    mean: float
    std: float
    available_count: int
    degenerate: bool


@dataclass
class ZStats:
    stats: dict[str, IndexStats]

    def __getitem__(self, name):
        return self.stats[name]


def _population_std(values, mean):
    return math.sqrt(math.fsum((v - mean) ** 2 for v in values) / len(values))


def zscore(matrix: list[RawIndices]) -> tuple[ZStats, list[dict[str, float]]]:
    """Z-score every index over the documents where it is available.  An
    index with fewer than two available values, or zero spread, is
    degenerate: all of its z values are 0 and the stats record the fact."""
    if not matrix:
        raise DataError("cannot normalize an empty corpus")
    stats = {}
    for name in INDEX_NAMES:
        values = [row.values[name] for row in matrix if row.available[name]]
        if not values:
            mean = 0.0
            std = 0.0
        elif min(values) == max(values):
            # an exactly constant column has zero spread; computing the mean
            # in floats can miss that by one ulp and turn 0/0 into garbage
            mean = values[0]
            std = 0.0
        else:
            mean = math.fsum(values) / len(values)
            std = _population_std(values, mean)
        degenerate = len(values) < 2 or std == 0.0
        stats[name] = IndexStats(mean=mean, std=std, available_count=len(values), degenerate=degenerate)
    zstats = ZStats(stats=stats)
    return zstats, apply_zstats(matrix, zstats)


def apply_zstats(matrix: list[RawIndices], zstats: ZStats) -> list[dict[str, float]]:
    """Normalize a raw-index matrix with precomputed statistics (the hook
    for scoring against an external reference population)."""
    zmatrix = []
    for row in matrix:
        z = {}
        for name in INDEX_NAMES:
            st = zstats[name]
            if st.degenerate or not row.available[name]:
                z[name] = 0.0
            else:
                z[name] = (row.values[name] - st.mean) / st.std
        zmatrix.append(z)
    return zmatrix


def apply_formula(z: dict[str, float], config: FormulaConfig) -> float:
    """Coefficient-weighted sum of z values over the formula's terms."""
    total = 0.0
    for index_name, coefficient in config.terms.items():
        if index_name not in INDEX_NAMES:
            raise ConfigError(f"formula {config.name!r}: unknown index {index_name!r}")
        total += coefficient * z.get(index_name, 0.0)
    return total


@dataclass
class Resources:
    wordnet: object = None
    ic: object = None
    vectors: object = None
    lexicon: object = None
    connectives: object = None
    embeddings: object = None  # SentenceEmbeddingSource


@dataclass
class IndexOptions:
    enabled: frozenset = frozenset(INDEX_NAMES)
    chunking: ChunkingParams = field(default_factory=ChunkingParams)
    pcref_mode: str = "adjacent"
    chunk_normalized: bool = False
    jobs: int = 1


# resource attributes every index needs before it can run
REQUIREMENTS = {
    "pcref": ("embeddings",),
    "pcref_chunk": ("embeddings",),
    "pcdc": ("connectives",),
    "smcaus_e": ("vectors",),
    "smcaus_wn": ("wordnet",),
    "wrdhyp_mean": ("wordnet",),
    "wrdhyp_norm": ("wordnet",),
    "wrdic": ("wordnet", "ic"),
    "msl": (),
    "pccnc": ("lexicon",),
    "wrdimg": ("lexicon",),
}


def validate_requirements(enabled, resources: Resources):
    for name in sorted(enabled):
        if name not in REQUIREMENTS:
            raise ConfigError(f"unknown index {name!r}")
        for attr in REQUIREMENTS[name]:
            if getattr(resources, attr) is None:
                raise ConfigError(f"index {name!r} requires the {attr} resource")


def _document_indices(doc, resources: Resources, options: IndexOptions) -> RawIndices:
    enabled = options.enabled
    row = RawIndices()
    if "pcref" in enabled:
        row.set("pcref", *idx_pcref(doc, resources.embeddings, options.pcref_mode))
    if "pcref_chunk" in enabled:
        if doc.sentences:
            chunks = idx_semantic_chunks(doc, resources.embeddings, options.chunking)
            value = chunks / len(doc.sentences) if options.chunk_normalized else float(chunks)
            row.set("pcref_chunk", value)
        else:
            row.set("pcref_chunk", 0.0, available=False)
    if "pcdc" in enabled:
        row.set("pcdc", *idx_pcdc(doc, resources.connectives))
    if "smcaus_e" in enabled:
        row.set("smcaus_e", *idx_smcaus_embed(doc, resources.vectors))
    if "smcaus_wn" in enabled:
        row.set("smcaus_wn", *idx_smcaus_wn(doc, resources.wordnet))
    if "wrdhyp_mean" in enabled:
        row.set("wrdhyp_mean", *idx_wrdhyp_mean(doc, resources.wordnet))
    if "wrdhyp_norm" in enabled:
        row.set("wrdhyp_norm", *idx_wrdhyp_norm(doc, resources.wordnet))
    if "wrdic" in enabled:
        row.set("wrdic", *idx_wrdic(doc, resources.wordnet, resources.ic))
    if "msl" in enabled:
        row.set("msl", *idx_msl(doc))
    if "pccnc" in enabled:
        row.set("pccnc", *idx_rating(doc, resources.lexicon, "concreteness"))
    if "wrdimg" in enabled:
        row.set("wrdimg", *idx_rating(doc, resources.lexicon, "imageability"))
    return row


def compute_corpus_indices(corpus, resources: Resources, options: IndexOptions) -> list[RawIndices]:
    """Compute every enabled index for every document, preserving corpus
    order.  Resource requirements are checked before any document is
    touched; per-document work fans out over a bounded thread pool."""
    validate_requirements(options.enabled, resources)
    if not corpus:
        return []
    if options.jobs <= 1 or len(corpus) == 1:
        return [_document_indices(doc, resources, options) for doc in corpus]
    with ThreadPoolExecutor(max_workers=options.jobs) as pool:
        return list(pool.map(lambda d: _document_indices(d, resources, options), corpus))


@dataclass
class GisScore:
    doc_id: str
    raw: dict[str, float]
    z: dict[str, float]
    available: dict[str, bool]
    gis: float


def score_documents(
    corpus,
    resources: Resources,
    options: IndexOptions,
    formula: FormulaConfig,
    zstats: ZStats | None = None,
) -> tuple[list[GisScore], ZStats]:
    """Full pipeline for one document population: raw indices, z-scores
    (computed over this corpus unless external stats are supplied), and the
    formula value per document."""
    matrix = compute_corpus_indices(corpus, resources, options)
    if zstats is None:
        zstats, zmatrix = zscore(matrix)
    else:
        zmatrix = apply_zstats(matrix, zstats)
    scores = []
    for doc, row, z in zip(corpus, matrix, zmatrix):
        scores.append(
            GisScore(
                doc_id=doc.doc_id,
                raw=dict(row.values),
                z=dict(z),
                available=dict(row.available),
                gis=apply_formula(z, formula),
            )
        )
    return scores, zstats
