"""Lexical resources: WordNet databases, information-content tables,
word-vector files, rating lexicons, connective lists and sentence-embedding
sidecars.  Everything here is immutable after load and safe to share
across scoring workers."""

from .ic import IcTable, build_ic, load_ic_file
from .support import (
    ConnectivePatterns,
    RatingLexicon,
    default_connectives,
    load_connectives,
    load_rating_lexicon,
    load_support_files,
)
from .vectors import (
    SidecarSource,
    WordVectors,
    WordVectorSource,
    cosine,
    cosine_checked,
    load_sidecar,
    load_word_vectors,
    sentence_embedding_avg,
)
from .wordnet import (
    Synset,
    SynsetId,
    WordNetDb,
    hypernym_paths,
    mean_path_length,
    parse_wordnet_db,
    path_lengths,
    path_stats,
    representative_path,
    root_scales,
)

__all__ = [
    "ConnectivePatterns",
    "IcTable",
    "RatingLexicon",
    "SidecarSource",
    "Synset",
    "SynsetId",
    "WordNetDb",
    "WordVectorSource",
    "WordVectors",
    "build_ic",
    "cosine",
    "cosine_checked",
    "default_connectives",
    "hypernym_paths",
    "load_connectives",
    "load_ic_file",
    "load_rating_lexicon",
    "load_sidecar",
    "load_support_files",
    "load_word_vectors",
    "mean_path_length",
    "parse_wordnet_db",
    "path_lengths",
    "path_stats",
    "representative_path",
    "root_scales",
    "sentence_embedding_avg",
]
