"""scigispy: referenceless gist-inference scoring for (biomedical) text
simplification.

Documents are tokenized, per-document cohesion/specificity indices are
computed against file-based lexical resources (WordNet, information
content, word vectors, rating lexicons, connective lists, embedding
sidecars), z-scored over the run's corpus, and combined by a weighted
formula.  The evaluation harness compares paired originals and
simplifications, benchmarks document groups with a t-test, and checks
correlation with FKGL/ARI readability.
"""

from .corpus import (
    Document,
    PairRecord,
    Sentence,
    Token,
    count_syllables,
    fallback_pos_and_lemma,
    load_pairs,
    load_plaintext_corpus,
    parse_conllu,
    segment_and_tokenize,
)
from .errors import ConfigError, DataError, ScigispyError
from .evalharness import (
    CompareReport,
    CorrelationReport,
    PairOutcome,
    TTestReport,
    ari,
    correlate_readability,
    fkgl,
    gis_difference,
    pair_stats,
    pearson,
    ttest_ind,
)
from .gis import (
    FormulaConfig,
    GisScore,
    IndexOptions,
    IndexStats,
    Resources,
    ZStats,
    apply_formula,
    apply_zstats,
    compute_corpus_indices,
    load_formula,
    preset,
    score_documents,
    zscore,
)
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

__version__ = "0.1.0"
