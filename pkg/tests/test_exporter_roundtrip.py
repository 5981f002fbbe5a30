"""Round-trip check for the embedding exporter: the sidecar it writes must
load in the scorer with matching record counts and exact self-similarity.
Skipped when the exporter has not been built (`npm run build` in
embed-exporter/); the rest of the suite never depends on it."""

import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from scigispy.indices import ChunkingParams, idx_pcref, idx_semantic_chunks
from scigispy.lexres import cosine, load_sidecar

EXPORTER = Path(__file__).parent.parent / "embed-exporter" / "dist" / "cli.js"

pytestmark = pytest.mark.skipif(
    not EXPORTER.is_file() or shutil.which("node") is None,
    reason="embed-exporter not built (run `npm install && npm run build` in embed-exporter/)",
)


@pytest.fixture()
def three_sentence_corpus(tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "d.txt").write_text("First one here. Second one there. Third one everywhere.")
    return corpus


def dump_sentences(corpus, tmp_path, buffer_size):
    dump_path = tmp_path / "dump.tsv"
    result = subprocess.run(
        [
            sys.executable, "-m", "scigispy", "score", str(corpus),
            "--dump-sentences", "--buffer-size", str(buffer_size),
            "--output", str(dump_path),
        ],
        capture_output=True,
    )
    assert result.returncode == 0, result.stderr.decode()
    return dump_path


def run_exporter(dump_path, out_path, *extra):
    result = subprocess.run(
        ["node", str(EXPORTER), "--dump", str(dump_path), "--output", str(out_path), *extra],
        capture_output=True,
    )
    assert result.returncode == 0, result.stderr.decode()
    return out_path


def test_exporter_roundtrip(three_sentence_corpus, tmp_path):
    dump_path = dump_sentences(three_sentence_corpus, tmp_path, buffer_size=0)
    sidecar_path = run_exporter(dump_path, tmp_path / "side.jsonl", "--encoder", "hashing", "--dim", "32")

    dump_rows = [line for line in dump_path.read_text().splitlines()[1:] if line]
    source = load_sidecar(sidecar_path)
    assert len(source.records) == len(dump_rows) == 3
    assert sorted(source.records) == [("d", 0), ("d", 1), ("d", 2)]

    for (doc_id, sent), vec in source.records.items():
        assert abs(cosine(vec, vec) - 1.0) <= 1e-6
    print(f"[PASS] exporter round-trip: {len(dump_rows)} records, self-similarity within 1e-6")


def test_sidecar_drives_the_indices(three_sentence_corpus, tmp_path):
    from scigispy.corpus import load_plaintext_corpus

    buffer_size = 1
    dump_path = dump_sentences(three_sentence_corpus, tmp_path, buffer_size)
    sidecar_path = run_exporter(dump_path, tmp_path / "side.jsonl", "--dim", "16")
    source = load_sidecar(sidecar_path)

    doc = load_plaintext_corpus(three_sentence_corpus)[0]
    value, available = idx_pcref(doc, source)
    assert available and -1.0 <= value <= 1.0
    chunks = idx_semantic_chunks(doc, source, ChunkingParams(buffer_size=buffer_size))
    assert 1 <= chunks <= len(doc.sentences)


def test_rerun_is_byte_identical(three_sentence_corpus, tmp_path):
    dump_path = dump_sentences(three_sentence_corpus, tmp_path, buffer_size=1)
    first = run_exporter(dump_path, tmp_path / "a.jsonl")
    second = run_exporter(dump_path, tmp_path / "b.jsonl")
    assert first.read_bytes() == second.read_bytes()
