import json

import numpy as np
import pytest

from scigispy.corpus import segment_and_tokenize
from scigispy.errors import DataError
from scigispy.lexres import (
    ConnectivePatterns,
    cosine,
    cosine_checked,
    default_connectives,
    load_connectives,
    load_rating_lexicon,
    load_sidecar,
    load_support_files,
    load_word_vectors,
    sentence_embedding_avg,
)


class TestWordVectors:
    def test_header_and_entries(self, tmp_path):
        path = tmp_path / "v.txt"
        path.write_text("2 3\nfoo 1 0 0\nbar 0 1 0\n")
        wv = load_word_vectors(path)
        assert wv.dim == 3 and len(wv) == 2
        assert np.array_equal(wv.get("FOO"), [1.0, 0.0, 0.0])

    def test_dimension_mismatch(self, tmp_path):
        path = tmp_path / "v.txt"
        path.write_text("2 3\nfoo 1 0 0\nbar 0 1\n")
        with pytest.raises(DataError, match="line 3"):
            load_word_vectors(path)

    def test_duplicate_word_last_wins(self, tmp_path, caplog):
        path = tmp_path / "v.txt"
        path.write_text("2 2\nfoo 1 0\nfoo 0 1\n")
        with caplog.at_level("WARNING"):
            wv = load_word_vectors(path)
        assert np.array_equal(wv.get("foo"), [0.0, 1.0])
        assert any("duplicate" in r.message for r in caplog.records)

    def test_bad_header(self, tmp_path):
        path = tmp_path / "v.txt"
        path.write_text("3\nfoo 1 0\n")
        with pytest.raises(DataError, match="header"):
            load_word_vectors(path)

    def test_non_finite_component(self, tmp_path):
        path = tmp_path / "v.txt"
        path.write_text("1 2\nfoo nan 0\n")
        with pytest.raises(DataError, match="non-finite"):
            load_word_vectors(path)


class TestCosine:
    def test_identity(self):
        v = np.array([1.0, 2.0, 3.0])
        assert cosine(v, v) == 1.0

    def test_orthogonal(self):
        assert cosine([1.0, 0.0], [0.0, 1.0]) == 0.0

    def test_zero_vector_degenerate(self):
        value, degenerate = cosine_checked([0.0, 0.0], [1.0, 0.0])
        assert value == 0.0 and degenerate

    def test_dim_mismatch(self):
        with pytest.raises(ValueError):
            cosine([1.0], [1.0, 0.0])

    def test_symmetry_and_bounds_random(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            u = rng.normal(size=5)
            v = rng.normal(size=5)
            c1, c2 = cosine(u, v), cosine(v, u)
            assert c1 == c2
            assert -1.0 <= c1 <= 1.0

    def test_self_similarity_random(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            u = rng.normal(size=8)
            assert abs(cosine(u, u) - 1.0) <= 1e-12


class TestSentenceEmbedding:
    def test_single_known_token(self, toy_vectors):
        doc = segment_and_tokenize("heart")
        vec, degenerate = sentence_embedding_avg(toy_vectors, doc.sentences[0].tokens)
        assert not degenerate
        assert np.array_equal(vec, toy_vectors.get("heart"))

    def test_mean_of_two(self, tmp_path):
        path = tmp_path / "v.txt"
        path.write_text("2 2\nfoo 1 0\nbar 0 1\n")
        wv = load_word_vectors(path)
        doc = segment_and_tokenize("foo bar")
        vec, degenerate = sentence_embedding_avg(wv, doc.sentences[0].tokens)
        assert not degenerate
        assert np.array_equal(vec, [0.5, 0.5])

    def test_all_oov_degenerate(self, toy_vectors):
        doc = segment_and_tokenize("zyzzyva qwerty")
        vec, degenerate = sentence_embedding_avg(toy_vectors, doc.sentences[0].tokens)
        assert degenerate and not vec.any()


class TestRatingLexicon:
    def test_entry_parsed(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("heart\t5.8\t6.1\n")
        lex = load_rating_lexicon(path)
        assert lex.get("HEART") == (5.8, 6.1)

    def test_header_detected(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("word\tconc\timag\nheart\t5.8\t6.1\n")
        lex = load_rating_lexicon(path)
        assert len(lex) == 1

    def test_malformed_line(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("heart\t5.8\t6.1\nbroken\t5.8\n")
        with pytest.raises(DataError, match="line 2"):
            load_rating_lexicon(path)

    def test_non_finite_rating(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("heart\tinf\t6.1\n")
        with pytest.raises(DataError, match="non-finite"):
            load_rating_lexicon(path)


class TestConnectives:
    def test_phrase_matching(self):
        patterns = ConnectivePatterns(["because", "so that"])
        assert patterns.count("He left so that she could rest.") == 1
        assert patterns.count("Because it rained, we stayed.") == 1

    def test_longest_pattern_wins(self):
        patterns = ConnectivePatterns(["so", "so that"])
        # "so that" must consume the whole phrase, not count "so" plus leftovers
        assert patterns.count("He left so that she could rest.") == 1
        assert patterns.count("He was tired, so he left.") == 1

    def test_word_boundaries(self):
        patterns = ConnectivePatterns(["so"])
        assert patterns.count("It was also soft.") == 0

    def test_load_file_with_comments(self, tmp_path):
        path = tmp_path / "conn.txt"
        path.write_text("# comment\nbecause\nso that\n\n")
        patterns = load_connectives(path)
        assert len(patterns) == 2

    def test_default_list_contains_because(self):
        patterns = default_connectives()
        assert patterns.count("He fell because it rained.") == 1


class TestSidecar:
    def _write(self, tmp_path, records, header=None):
        path = tmp_path / "side.jsonl"
        lines = [] if header is None else [header]
        lines += [json.dumps(r) for r in records]
        path.write_text("\n".join(lines) + "\n")
        return path

    def test_lookup(self, tmp_path):
        path = self._write(
            tmp_path,
            [
                {"doc_id": "d", "sent": 0, "vec": [1.0, 0.0]},
                {"doc_id": "d", "sent": 1, "vec": [0.0, 1.0]},
            ],
            header="# encoder=test pooling=mean",
        )
        src = load_sidecar(path)
        assert src.dim == 2
        assert np.array_equal(src.embed("d", 1, "ignored"), [0.0, 1.0])

    def test_missing_key_is_error(self, tmp_path):
        path = self._write(tmp_path, [{"doc_id": "d", "sent": 0, "vec": [1.0]}])
        src = load_sidecar(path)
        with pytest.raises(DataError, match="no vector"):
            src.embed("other", 0, "x")

    def test_non_numeric_component(self, tmp_path):
        path = self._write(tmp_path, [{"doc_id": "d", "sent": 0, "vec": ["x", 1.0]}])
        with pytest.raises(DataError, match="non-numeric"):
            load_sidecar(path)

    def test_dimension_drift(self, tmp_path):
        path = self._write(
            tmp_path,
            [
                {"doc_id": "d", "sent": 0, "vec": [1.0] * 384},
                {"doc_id": "d", "sent": 1, "vec": [1.0] * 385},
            ],
        )
        with pytest.raises(DataError, match="dimension"):
            load_sidecar(path)

    def test_load_support_files_combo(self, tmp_path, fixtures_dir):
        side = self._write(tmp_path, [{"doc_id": "d", "sent": 0, "vec": [1.0]}])
        lexicon, connectives, sidecar = load_support_files(
            fixtures_dir / "ratings_toy.tsv", None, side
        )
        assert lexicon is not None and connectives is None and sidecar is not None
