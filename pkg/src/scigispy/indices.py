"""Raw (pre-normalization) document indices.

Each index function returns (value, available); an index is unavailable
when the document gives it nothing to measure (too few sentences, no
in-vocabulary verbs, no rated words, ...), in which case the value is 0.0
and the flag is False.  Normalization and weighting happen downstream, so
everything here is a plain per-document statistic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from statistics import fmean

import numpy as np

from .corpus import NOUN, VERB, Document
from .lexres.ic import IcTable
from .lexres.vectors import WordVectors, cosine
from .lexres.wordnet import WordNetDb, mean_path_length, representative_path, root_scales

INDEX_NAMES = (
    "pcref",
    "pcref_chunk",
    "pcdc",
    "smcaus_e",
    "smcaus_wn",
    "wrdhyp_mean",
    "wrdhyp_norm",
    "wrdic",
    "msl",
    "pccnc",
    "wrdimg",
)


@dataclass
class RawIndices:
    """Per-document index vector: a value and an availability flag for
    every index name, unavailable entries pinned at 0.0."""

    values: dict[str, float] = field(default_factory=dict)
    available: dict[str, bool] = field(default_factory=dict)

    def __post_init__(self):
        for name in INDEX_NAMES:
            self.values.setdefault(name, 0.0)
            self.available.setdefault(name, False)

    def set(self, name, value, available=True):
        if name not in INDEX_NAMES:
            raise KeyError(name)
        self.values[name] = float(value) if available else 0.0
        self.available[name] = bool(available)

    def get(self, name):
        return self.values[name], self.available[name]


@dataclass
class ChunkingParams:
    buffer_size: int = 1
    breakpoint_percentile: float = 95.0

    def __post_init__(self):
        if self.buffer_size < 0:
            raise ValueError("buffer_size must be >= 0")
        if not 0.0 < self.breakpoint_percentile <= 100.0:
            raise ValueError("breakpoint_percentile must be in (0, 100]")


def _sentence_vectors(doc, src, buffer_size=0):
    vectors = []
    n = len(doc.sentences)
    for i in range(n):
        if buffer_size == 0:
            text = doc.sentences[i].raw
        else:
            lo = max(0, i - buffer_size)
            hi = min(n - 1, i + buffer_size)
            text = " ".join(s.raw for s in doc.sentences[lo : hi + 1])
        vectors.append(np.asarray(src.embed(doc.doc_id, i, text), dtype=np.float64))
    return vectors


def idx_pcref(doc: Document, src, mode: str = "adjacent") -> tuple[float, bool]:
    """Referential cohesion: mean cosine similarity of sentence embeddings,
    either consecutive pairs or all unordered pairs."""
    if mode not in ("adjacent", "all_pairs"):
        raise ValueError(f"unknown pcref mode {mode!r}")
    n = len(doc.sentences)
    if n < 2:
        return 0.0, False
    vectors = _sentence_vectors(doc, src)
    if mode == "adjacent":
        sims = [cosine(vectors[i], vectors[i + 1]) for i in range(n - 1)]
    else:
        sims = [cosine(vectors[i], vectors[j]) for i in range(n) for j in range(i + 1, n)]
    return fmean(sims), True


def idx_semantic_chunks(doc: Document, src, params: ChunkingParams) -> int:
    """Semantic chunk count: embed each sentence with its context window,
    take cosine distances between consecutive embeddings, and break where
    the distance strictly exceeds the configured percentile of all
    distances.  One sentence means one chunk."""
    n = len(doc.sentences)
    if n == 0:
        raise ValueError("document has no sentences")
    if n == 1:
        return 1
    vectors = _sentence_vectors(doc, src, params.buffer_size)
    distances = np.array(
        [1.0 - cosine(vectors[i], vectors[i + 1]) for i in range(n - 1)], dtype=np.float64
    )
    threshold = float(np.percentile(distances, params.breakpoint_percentile))
    breakpoints = int(np.sum(distances > threshold))
    return breakpoints + 1


def idx_pcdc(doc: Document, patterns) -> tuple[float, bool]:
    """Deep cohesion: connective matches per sentence."""
    n = len(doc.sentences)
    if n == 0:
        return 0.0, False
    matches = sum(patterns.count(s.raw) for s in doc.sentences)
    return matches / n, True


def _verb_tokens(doc):
    return [t for t in doc.tokens() if t.pos == VERB]


def idx_smcaus_embed(doc: Document, wv: WordVectors) -> tuple[float, bool]:
    """Verb overlap, embedding flavor: mean cosine over all unordered pairs
    of verb vectors (lemma lookup, surface fallback; OOV verbs skipped)."""
    vectors = []
    for token in _verb_tokens(doc):
        vec = wv.get(token.lemma)
        if vec is None:
            vec = wv.get(token.surface)
        if vec is not None:
            vectors.append(vec)
    if len(vectors) < 2:
        return 0.0, False
    sims = [
        cosine(vectors[i], vectors[j])
        for i in range(len(vectors))
        for j in range(i + 1, len(vectors))
    ]
    return fmean(sims), True


def idx_smcaus_wn(doc: Document, db: WordNetDb) -> tuple[float, bool]:
    """Verb overlap, WordNet flavor: fraction of unordered verb pairs whose
    synset sets intersect; verbs without verb synsets are skipped."""
    synset_sets = []
    for token in _verb_tokens(doc):
        synsets = db.lookup(token.lemma, "v")
        if synsets:
            synset_sets.append(frozenset(synsets))
    if len(synset_sets) < 2:
        return 0.0, False
    hits = 0
    total = 0
    for i in range(len(synset_sets)):
        for j in range(i + 1, len(synset_sets)):
            total += 1
            if synset_sets[i] & synset_sets[j]:
                hits += 1
    return hits / total, True


def _content_synsets(db, token):
    pos = "n" if token.pos == NOUN else "v" if token.pos == VERB else None
    if pos is None:
        return []
    return db.lookup(token.lemma, pos)


def idx_wrdhyp_mean(doc: Document, db: WordNetDb) -> tuple[float, bool]:
    """Word specificity: mean hypernym path length.  Per token, each synset
    contributes the mean length over all of its root paths; the token value
    averages its synsets; the index averages tokens with any synset."""
    token_values = []
    for token in doc.tokens():
        synsets = _content_synsets(db, token)
        if not synsets:
            continue
        per_synset = [mean_path_length(db, sid) for sid in synsets]
        token_values.append(fmean(per_synset))
    if not token_values:
        return 0.0, False
    return fmean(token_values), True


def idx_wrdhyp_norm(doc: Document, db: WordNetDb, l1_variant: bool = False) -> tuple[float, bool]:
    """Root-normalized word specificity.  Per token: each synset is
    represented by its longest root path; representatives are grouped by
    root; each length is divided by that root's database-wide maximum
    representative length; the token value is the mean over groups of the
    group's mean normalized length.

    The l1_variant divides within-group lengths by the group's L1 norm
    instead of the per-root scale.  Its group means collapse to 1/|group|
    regardless of the lengths involved, so it exists for comparison runs
    only and is never the default.
    """
    scales = root_scales(db)
    token_values = []
    for token in doc.tokens():
        synsets = _content_synsets(db, token)
        if not synsets:
            continue
        groups: dict = {}
        for sid in synsets:
            length, root = representative_path(db, sid)
            groups.setdefault(root, []).append(length)
        group_means = []
        for root, lengths in sorted(groups.items()):
            if l1_variant:
                total = sum(lengths)
                group_means.append(fmean([length / total for length in lengths]))
            else:
                group_means.append(fmean([length / scales[root] for length in lengths]))
        token_values.append(fmean(group_means))
    if not token_values:
        return 0.0, False
    return fmean(token_values), True


def idx_wrdic(doc: Document, db: WordNetDb, ic: IcTable) -> tuple[float, bool]:
    """Word specificity via information content: per noun/verb token, the
    mean IC over its synsets (synsets without probability mass skipped);
    the index averages tokens with at least one scored synset."""
    token_values = []
    for token in doc.tokens():
        synsets = _content_synsets(db, token)
        ics = [value for sid in synsets if (value := ic.ic(sid)) is not None]
        if ics:
            token_values.append(fmean(ics))
    if not token_values:
        return 0.0, False
    return fmean(token_values), True


def idx_msl(doc: Document) -> tuple[float, bool]:
    """Mean sentence length in word (non-punctuation) tokens."""
    if not doc.sentences:
        return 0.0, False
    return fmean([s.word_count() for s in doc.sentences]), True


def idx_rating(doc: Document, lexicon, which: str) -> tuple[float, bool]:
    """Mean concreteness or imageability rating over the word tokens found
    in the lexicon (surface first, then lemma)."""
    if which == "concreteness":
        pick = 0
    elif which == "imageability":
        pick = 1
    else:
        raise ValueError(f"unknown rating {which!r}")
    hits = []
    for token in doc.tokens():
        if not token.is_word:
            continue
        ratings = lexicon.get(token.surface)
        if ratings is None:
            ratings = lexicon.get(token.lemma)
        if ratings is not None:
            hits.append(ratings[pick])
    if not hits:
        return 0.0, False
    return fmean(hits), True
