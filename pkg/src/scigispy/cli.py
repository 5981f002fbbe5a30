"""Command-line interface.

Subcommands:
  score      per-document raw indices, z-scores and the formula value
  pairs      paired evaluation (abs vs pls) with aggregate statistics
  bench      two-group comparison with a Student t-test
  correlate  Pearson correlation of the score against FKGL and ARI

Exit codes: 0 success, 1 data error (unreadable/malformed input), 2
configuration error (unknown preset, missing resource for an enabled
index, group too small).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import report
from .corpus import load_pairs, load_plaintext_corpus, parse_conllu
from .errors import ConfigError, DataError
from .evalharness import correlate_readability, ari, fkgl, make_outcome, pair_stats, ttest_ind
from .gis import (
    IndexOptions,
    Resources,
    apply_formula,
    compute_corpus_indices,
    load_formula,
    score_documents,
    zscore,
)
from .indices import INDEX_NAMES, ChunkingParams
from .lexres import (
    WordVectorSource,
    default_connectives,
    load_ic_file,
    load_support_files,
    load_word_vectors,
    parse_wordnet_db,
)


@dataclass
class RunConfig:
    wordnet_dir: str | None = None
    ic_file: str | None = None
    vectors_file: str | None = None
    lexicon_file: str | None = None
    connectives_file: str | None = None
    sidecar_file: str | None = None
    formula: str = "scigispy"
    baseline: str | None = None
    buffer_size: int = 1
    breakpoint_percentile: float = 95.0
    indices: list[str] | None = None
    pcref_mode: str = "adjacent"
    chunk_normalized: bool = False
    format: str = "tsv"
    jobs: int = 1
    z_population: str = "combined"

    @classmethod
    def from_file(cls, path):
        path = Path(path)
        try:
            obj = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise DataError(f"cannot read config file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise DataError(f"{path}: invalid JSON ({exc.msg})") from exc
        if not isinstance(obj, dict):
            raise ConfigError(f"{path}: config must be a JSON object")
        known = {f.name for f in dataclasses.fields(cls)}
        for key in obj:
            if key not in known:
                raise ConfigError(f"{path}: unknown config field {key!r}")
        return cls(**obj)

    def merged_with_args(self, args):
        cfg = dataclasses.replace(self)
        for field in dataclasses.fields(self):
            value = getattr(args, field.name, None)
            if value is not None:
                setattr(cfg, field.name, value)
        if cfg.indices is not None and isinstance(cfg.indices, str):
            cfg.indices = [s for s in cfg.indices.split(",") if s]
        return cfg


# config fields that must be present for each index to be computable;
# tuples are alternatives (any one suffices)
_FIELD_REQUIREMENTS = {
    "pcref": [("sidecar_file", "vectors_file")],
    "pcref_chunk": [("sidecar_file", "vectors_file")],
    "pcdc": [],  # the package ships a default connective list
    "smcaus_e": [("vectors_file",)],
    "smcaus_wn": [("wordnet_dir",)],
    "wrdhyp_mean": [("wordnet_dir",)],
    "wrdhyp_norm": [("wordnet_dir",)],
    "wrdic": [("wordnet_dir",), ("ic_file",)],
    "msl": [],
    "pccnc": [("lexicon_file",)],
    "wrdimg": [("lexicon_file",)],
}


def _validate_config(cfg: RunConfig, enabled):
    if cfg.format not in ("tsv", "json"):
        raise ConfigError(f"unknown output format {cfg.format!r}")
    if cfg.pcref_mode not in ("adjacent", "all"):
        raise ConfigError(f"unknown pcref mode {cfg.pcref_mode!r}")
    if cfg.z_population not in ("combined", "per-side"):
        raise ConfigError(f"unknown z population {cfg.z_population!r}")
    if cfg.jobs < 1:
        raise ConfigError("jobs must be >= 1")
    if cfg.buffer_size < 0:
        raise ConfigError("buffer size must be >= 0")
    if not 0.0 < cfg.breakpoint_percentile <= 100.0:
        raise ConfigError("breakpoint percentile must be in (0, 100]")
    if cfg.ic_file and not cfg.wordnet_dir:
        raise ConfigError("ic_file requires wordnet_dir")
    for name in sorted(enabled):
        if name not in INDEX_NAMES:
            raise ConfigError(f"unknown index {name!r}")
        for alternatives in _FIELD_REQUIREMENTS[name]:
            if not any(getattr(cfg, field) for field in alternatives):
                wanted = " or ".join(f"--{f.replace('_', '-')}" for f in alternatives)
                raise ConfigError(f"index {name!r} requires {wanted}")


def _load_resources(cfg: RunConfig) -> Resources:
    wordnet = parse_wordnet_db(cfg.wordnet_dir) if cfg.wordnet_dir else None
    ic = load_ic_file(cfg.ic_file, wordnet) if cfg.ic_file else None
    vectors = load_word_vectors(cfg.vectors_file) if cfg.vectors_file else None
    lexicon, connectives, sidecar = load_support_files(
        cfg.lexicon_file, cfg.connectives_file, cfg.sidecar_file
    )
    if connectives is None:
        connectives = default_connectives()
    if sidecar is not None:
        embeddings = sidecar
    elif vectors is not None:
        embeddings = WordVectorSource(vectors)
    else:
        embeddings = None
    return Resources(
        wordnet=wordnet,
        ic=ic,
        vectors=vectors,
        lexicon=lexicon,
        connectives=connectives,
        embeddings=embeddings,
    )


def _index_options(cfg: RunConfig, enabled) -> IndexOptions:
    return IndexOptions(
        enabled=frozenset(enabled),
        chunking=ChunkingParams(
            buffer_size=cfg.buffer_size, breakpoint_percentile=cfg.breakpoint_percentile
        ),
        pcref_mode="all_pairs" if cfg.pcref_mode == "all" else "adjacent",
        chunk_normalized=cfg.chunk_normalized,
        jobs=cfg.jobs,
    )


def _load_corpus(path, db):
    p = Path(path)
    if p.is_dir():
        return load_plaintext_corpus(p, db)
    if p.suffix == ".conllu":
        if not p.is_file():
            raise DataError(f"cannot read {p}")
        with open(p, encoding="utf-8") as fh:
            docs = parse_conllu(fh)
        if not docs:
            raise DataError(f"{p}: no documents")
        return docs
    raise DataError(f"cannot load corpus from {p}: expected a directory of .txt files or a .conllu file")


def _open_output(args):
    if args.output:
        return open(args.output, "w", encoding="utf-8", newline="\n")
    return sys.stdout


def _enabled_indices(cfg: RunConfig, *formulas):
    if cfg.indices is not None:
        return frozenset(cfg.indices)
    enabled = set()
    for formula in formulas:
        if formula is not None:
            enabled.update(formula.terms)
    return frozenset(enabled)


def cmd_score(args) -> int:
    cfg = _config_from_args(args)
    if args.dump_sentences:
        if cfg.buffer_size < 0:
            raise ConfigError("buffer size must be >= 0")
        docs = _load_corpus(args.corpus, None)
        out = _open_output(args)
        try:
            report.write_sentence_dump(out, docs, cfg.buffer_size)
        finally:
            if out is not sys.stdout:
                out.close()
        return 0
    formula = load_formula(cfg.formula)
    enabled = _enabled_indices(cfg, formula)
    _validate_config(cfg, enabled)
    resources = _load_resources(cfg)
    docs = _load_corpus(args.corpus, resources.wordnet)
    scores, zstats = score_documents(docs, resources, _index_options(cfg, enabled), formula)
    out = _open_output(args)
    try:
        if cfg.format == "json":
            report.write_score_json(out, scores, enabled, zstats)
        else:
            report.write_score_tsv(out, scores, enabled)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_pairs(args) -> int:
    cfg = _config_from_args(args)
    formula = load_formula(cfg.formula)
    baseline = load_formula(cfg.baseline) if cfg.baseline else None
    enabled = _enabled_indices(cfg, formula, baseline)
    _validate_config(cfg, enabled)
    resources = _load_resources(cfg)
    pairs = load_pairs(args.pairs, resources.wordnet)
    if not pairs:
        raise DataError(f"empty pairs file: {args.pairs}")

    docs = []
    for pair in pairs:
        docs.append(pair.abs_doc)
        docs.append(pair.pls_doc)
    options = _index_options(cfg, enabled)
    matrix = compute_corpus_indices(docs, resources, options)
    if cfg.z_population == "combined":
        _, zmatrix = zscore(matrix)
    else:
        abs_rows = matrix[0::2]
        pls_rows = matrix[1::2]
        _, z_abs = zscore(abs_rows)
        _, z_pls = zscore(pls_rows)
        zmatrix = [z for pair_z in zip(z_abs, z_pls) for z in pair_z]

    outcomes = []
    base_outcomes = [] if baseline else None
    for i, pair in enumerate(pairs):
        z_abs_doc, z_pls_doc = zmatrix[2 * i], zmatrix[2 * i + 1]
        outcomes.append(
            make_outcome(pair.pair_id, apply_formula(z_abs_doc, formula), apply_formula(z_pls_doc, formula))
        )
        if baseline:
            base_outcomes.append(
                make_outcome(pair.pair_id, apply_formula(z_abs_doc, baseline), apply_formula(z_pls_doc, baseline))
            )
    stats = pair_stats(outcomes, base_outcomes)
    out = _open_output(args)
    try:
        if cfg.format == "json":
            report.write_pairs_json(out, outcomes, stats)
        else:
            report.write_pairs_tsv(out, outcomes, stats)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_bench(args) -> int:
    cfg = _config_from_args(args)
    formula = load_formula(cfg.formula)
    enabled = _enabled_indices(cfg, formula)
    _validate_config(cfg, enabled)
    resources = _load_resources(cfg)
    group1 = _load_corpus(args.group1, resources.wordnet)
    group2 = _load_corpus(args.group2, resources.wordnet)
    if len(group1) < 2 or len(group2) < 2:
        raise ConfigError("each benchmark group needs at least two documents")
    options = _index_options(cfg, enabled)
    matrix = compute_corpus_indices(group1 + group2, resources, options)
    _, zmatrix = zscore(matrix)
    gis = [apply_formula(z, formula) for z in zmatrix]
    result = ttest_ind(gis[: len(group1)], gis[len(group1) :])
    out = _open_output(args)
    try:
        if cfg.format == "json":
            report.write_ttest_json(out, result, len(group1), len(group2))
        else:
            report.write_ttest_tsv(out, result, len(group1), len(group2))
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_correlate(args) -> int:
    cfg = _config_from_args(args)
    formula = load_formula(cfg.formula)
    enabled = _enabled_indices(cfg, formula)
    _validate_config(cfg, enabled)
    resources = _load_resources(cfg)
    docs = _load_corpus(args.corpus, resources.wordnet)
    if len(docs) < 2:
        raise DataError("correlation needs at least two documents")
    scores, _ = score_documents(docs, resources, _index_options(cfg, enabled), formula)
    triples = [(s.gis, fkgl(doc), ari(doc)) for s, doc in zip(scores, docs)]
    result = correlate_readability(triples)
    out = _open_output(args)
    try:
        if cfg.format == "json":
            report.write_correlation_json(out, result)
        else:
            report.write_correlation_tsv(out, result)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _config_from_args(args) -> RunConfig:
    if args.config:
        cfg = RunConfig.from_file(args.config)
    else:
        cfg = RunConfig()
    return cfg.merged_with_args(args)


def _add_common_arguments(sub):
    sub.add_argument("--config", help="JSON config file mirroring the run options")
    sub.add_argument("--wordnet-dir", dest="wordnet_dir", help="directory with WordNet 3.0 database files")
    sub.add_argument("--ic-file", dest="ic_file", help="precomputed information-content count file")
    sub.add_argument("--vectors-file", dest="vectors_file", help="word-vector text file (header 'V D')")
    sub.add_argument("--lexicon-file", dest="lexicon_file", help="concreteness/imageability TSV lexicon")
    sub.add_argument("--connectives-file", dest="connectives_file", help="connective pattern list")
    sub.add_argument("--sidecar-file", dest="sidecar_file", help="precomputed sentence-embedding sidecar")
    sub.add_argument("--formula", help="formula preset name or JSON config path")
    sub.add_argument("--baseline", help="baseline formula preset name or JSON config path")
    sub.add_argument("--buffer-size", dest="buffer_size", type=int, help="sentence context window for chunking")
    sub.add_argument(
        "--percentile",
        dest="breakpoint_percentile",
        type=float,
        help="chunking breakpoint percentile in (0, 100]",
    )
    sub.add_argument("--indices", help="comma-separated index subset to compute")
    sub.add_argument("--pcref-mode", dest="pcref_mode", choices=["adjacent", "all"])
    sub.add_argument("--z-population", dest="z_population", choices=["combined", "per-side"])
    sub.add_argument("--format", choices=["tsv", "json"])
    sub.add_argument("--jobs", type=int, help="parallel scoring workers")
    sub.add_argument("--output", help="write the report to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scigispy",
        description="Referenceless gist-inference scoring for text simplification evaluation",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_score = subparsers.add_parser("score", help="score every document of a corpus")
    p_score.add_argument("corpus", help="directory of .txt files or a .conllu file")
    p_score.add_argument(
        "--dump-sentences",
        action="store_true",
        help="write the (doc_id, sent, windowed text) table instead of scoring",
    )
    _add_common_arguments(p_score)
    p_score.set_defaults(func=cmd_score)

    p_pairs = subparsers.add_parser("pairs", help="evaluate abs/pls pairs")
    p_pairs.add_argument("pairs", help="JSON-lines pairs file (pair_id, abs_text, pls_text)")
    _add_common_arguments(p_pairs)
    p_pairs.set_defaults(func=cmd_pairs)

    p_bench = subparsers.add_parser("bench", help="two-group t-test benchmark")
    p_bench.add_argument("group1", help="first corpus (directory or .conllu)")
    p_bench.add_argument("group2", help="second corpus (directory or .conllu)")
    _add_common_arguments(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    p_corr = subparsers.add_parser("correlate", help="correlate the score with FKGL and ARI")
    p_corr.add_argument("corpus", help="directory of .txt files or a .conllu file")
    _add_common_arguments(p_corr)
    p_corr.set_defaults(func=cmd_correlate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"scigispy: configuration error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"scigispy: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"scigispy: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
