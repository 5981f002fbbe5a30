import json
import math

import numpy as np
import pytest

from scigispy.corpus import segment_and_tokenize
from scigispy.errors import ConfigError
from scigispy.gis import (
    FormulaConfig,
    IndexOptions,
    Resources,
    apply_formula,
    apply_zstats,
    compute_corpus_indices,
    load_formula,
    preset,
    score_documents,
    zscore,
)
from scigispy.indices import INDEX_NAMES, RawIndices


def rows_from_values(name, values, available=None):
    rows = []
    for i, value in enumerate(values):
        row = RawIndices()
        flag = True if available is None else available[i]
        row.set(name, value if flag else 0.0, available=flag)
        rows.append(row)
    return rows


def zero_z():
    return {name: 0.0 for name in INDEX_NAMES}


class TestZscore:
    def test_two_values(self):
        stats, zmatrix = zscore(rows_from_values("msl", [1.0, 3.0]))
        assert stats["msl"].mean == 2.0
        assert stats["msl"].std == 1.0
        assert [z["msl"] for z in zmatrix] == [-1.0, 1.0]

    def test_constant_index_degenerate(self):
        stats, zmatrix = zscore(rows_from_values("msl", [4.0, 4.0, 4.0]))
        assert stats["msl"].degenerate
        assert all(z["msl"] == 0.0 for z in zmatrix)

    def test_single_available_degenerate(self):
        rows = rows_from_values("msl", [4.0, 9.0], available=[True, False])
        stats, zmatrix = zscore(rows)
        assert stats["msl"].available_count == 1
        assert stats["msl"].degenerate
        assert all(z["msl"] == 0.0 for z in zmatrix)

    def test_unavailable_rows_excluded_from_stats(self):
        rows = rows_from_values("msl", [1.0, 3.0, 99.0], available=[True, True, False])
        stats, zmatrix = zscore(rows)
        assert stats["msl"].mean == 2.0
        assert zmatrix[2]["msl"] == 0.0

    def test_normalized_moments(self):
        rng = np.random.default_rng(17)
        values = list(rng.normal(10.0, 4.0, size=37))
        _, zmatrix = zscore(rows_from_values("wrdic", values))
        zs = [z["wrdic"] for z in zmatrix]
        mean = math.fsum(zs) / len(zs)
        std = math.sqrt(math.fsum((z - mean) ** 2 for z in zs) / len(zs))
        assert abs(mean) < 1e-9
        assert abs(std - 1.0) < 1e-9

    def test_affine_rescaling_leaves_z_unchanged(self):
        rng = np.random.default_rng(23)
        values = list(rng.normal(size=20))
        _, z1 = zscore(rows_from_values("wrdic", values))
        _, z2 = zscore(rows_from_values("wrdic", [3.7 * v + 11.0 for v in values]))
        for a, b in zip(z1, z2):
            assert abs(a["wrdic"] - b["wrdic"]) < 1e-9

    def test_permutation_permutes_z(self):
        values = [1.0, 5.0, 2.0, 8.0]
        _, z = zscore(rows_from_values("msl", values))
        order = [2, 0, 3, 1]
        _, z_perm = zscore(rows_from_values("msl", [values[i] for i in order]))
        for new_pos, old_pos in enumerate(order):
            assert z_perm[new_pos]["msl"] == z[old_pos]["msl"]

    def test_external_stats_reusable(self):
        rows = rows_from_values("msl", [1.0, 3.0])
        stats, _ = zscore(rows)
        z = apply_zstats(rows_from_values("msl", [2.0]), stats)
        assert z[0]["msl"] == 0.0


class TestFormula:
    def test_all_zero_z(self):
        for name in ("original_gispy", "scigispy"):
            assert apply_formula(zero_z(), preset(name)) == 0.0

    def test_single_term_positive(self):
        z = zero_z()
        z["pcref"] = 1.0
        assert apply_formula(z, preset("original_gispy")) == 1.0

    def test_msl_negative_polarity(self):
        z = zero_z()
        z["msl"] = 1.0
        assert apply_formula(z, preset("scigispy")) == -1.0

    def test_linearity(self):
        rng = np.random.default_rng(5)
        cfg = preset("scigispy")
        z1 = {name: float(v) for name, v in zip(INDEX_NAMES, rng.normal(size=len(INDEX_NAMES)))}
        z2 = {name: float(v) for name, v in zip(INDEX_NAMES, rng.normal(size=len(INDEX_NAMES)))}
        z_sum = {name: z1[name] + z2[name] for name in INDEX_NAMES}
        assert apply_formula(z_sum, cfg) == pytest.approx(
            apply_formula(z1, cfg) + apply_formula(z2, cfg), abs=1e-12
        )

    def test_unknown_term_rejected(self):
        with pytest.raises(ConfigError, match="bogus"):
            FormulaConfig(name="x", terms={"bogus": 1.0})

    def test_preset_terms(self):
        original = preset("original_gispy")
        enhanced = preset("scigispy")
        assert len(original.terms) == 7
        assert len(enhanced.terms) == 6
        assert all(abs(c) == 1.0 for c in original.terms.values())
        assert all(abs(c) == 1.0 for c in enhanced.terms.values())
        assert original.terms["smcaus_wn"] == -1.0
        assert original.terms["wrdhyp_mean"] == -1.0
        assert enhanced.terms["pcref_chunk"] == -1.0
        assert enhanced.terms["wrdic"] == -1.0

    def test_unknown_preset(self):
        with pytest.raises(ConfigError, match="bogus"):
            preset("bogus")

    def test_load_formula_from_file(self, tmp_path):
        path = tmp_path / "formula.json"
        path.write_text(json.dumps({"name": "msl_only", "terms": {"msl": 1.0}}))
        cfg = load_formula(str(path))
        assert cfg.name == "msl_only" and cfg.terms == {"msl": 1.0}

    def test_load_formula_unknown_spec(self):
        with pytest.raises(ConfigError):
            load_formula("no_such_preset_or_file")


class TestComputeCorpusIndices:
    def test_msl_only(self):
        docs = [segment_and_tokenize("One two three.", doc_id="a"),
                segment_and_tokenize("One two.", doc_id="b")]
        options = IndexOptions(enabled=frozenset({"msl"}))
        matrix = compute_corpus_indices(docs, Resources(), options)
        assert [row.values["msl"] for row in matrix] == [3.0, 2.0]
        for row in matrix:
            assert row.available["msl"]
            assert not any(row.available[n] for n in INDEX_NAMES if n != "msl")

    def test_missing_resource_names_index(self):
        docs = [segment_and_tokenize("One two.", doc_id="a")]
        options = IndexOptions(enabled=frozenset({"wrdic"}))
        with pytest.raises(ConfigError, match="wrdic"):
            compute_corpus_indices(docs, Resources(), options)

    def test_empty_corpus(self):
        assert compute_corpus_indices([], Resources(), IndexOptions(enabled=frozenset({"msl"}))) == []

    def test_chunk_normalized_variant(self, pairs10, toy_resources):
        docs = [pairs10[0].abs_doc]
        options = IndexOptions(enabled=frozenset({"pcref_chunk"}))
        absolute = compute_corpus_indices(docs, toy_resources, options)[0]
        normalized = compute_corpus_indices(
            docs, toy_resources, IndexOptions(enabled=frozenset({"pcref_chunk"}), chunk_normalized=True)
        )[0]
        sentences = len(docs[0].sentences)
        assert absolute.values["pcref_chunk"] == float(int(absolute.values["pcref_chunk"]))
        assert normalized.values["pcref_chunk"] == absolute.values["pcref_chunk"] / sentences

    def test_jobs_do_not_change_results(self, pairs10, toy_resources):
        docs = [d for p in pairs10 for d in (p.abs_doc, p.pls_doc)]
        enabled = frozenset(INDEX_NAMES)
        serial = compute_corpus_indices(docs, toy_resources, IndexOptions(enabled=enabled, jobs=1))
        parallel = compute_corpus_indices(docs, toy_resources, IndexOptions(enabled=enabled, jobs=8))
        assert [r.values for r in serial] == [r.values for r in parallel]
        assert [r.available for r in serial] == [r.available for r in parallel]


class TestScoreDocuments:
    def test_gis_is_weighted_sum(self, pairs10, toy_resources):
        docs = [d for p in pairs10 for d in (p.abs_doc, p.pls_doc)]
        formula = preset("scigispy")
        options = IndexOptions(enabled=frozenset(formula.terms))
        scores, _ = score_documents(docs, toy_resources, options, formula)
        for s in scores:
            expected = sum(c * s.z[n] for n, c in formula.terms.items())
            assert s.gis == pytest.approx(expected, abs=1e-12)

    def test_document_order_preserved(self, pairs10, toy_resources):
        docs = [d for p in pairs10 for d in (p.abs_doc, p.pls_doc)]
        formula = preset("scigispy")
        options = IndexOptions(enabled=frozenset(formula.terms))
        scores, _ = score_documents(docs, toy_resources, options, formula)
        assert [s.doc_id for s in scores] == [d.doc_id for d in docs]
