from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def toy_db():
    from scigispy.lexres import parse_wordnet_db

    return parse_wordnet_db(FIXTURES / "wordnet")


@pytest.fixture(scope="session")
def toy_ic(toy_db):
    from scigispy.lexres import load_ic_file

    return load_ic_file(FIXTURES / "ic_toy.dat", toy_db)


@pytest.fixture(scope="session")
def toy_vectors():
    from scigispy.lexres import load_word_vectors

    return load_word_vectors(FIXTURES / "vectors_toy.txt")


@pytest.fixture(scope="session")
def toy_lexicon():
    from scigispy.lexres import load_rating_lexicon

    return load_rating_lexicon(FIXTURES / "ratings_toy.tsv")


@pytest.fixture(scope="session")
def toy_resources(toy_db, toy_ic, toy_vectors, toy_lexicon):
    from scigispy.gis import Resources
    from scigispy.lexres import WordVectorSource, default_connectives

    return Resources(
        wordnet=toy_db,
        ic=toy_ic,
        vectors=toy_vectors,
        lexicon=toy_lexicon,
        connectives=default_connectives(),
        embeddings=WordVectorSource(toy_vectors),
    )


@pytest.fixture(scope="session")
def pairs10(toy_db):
    from scigispy.corpus import load_pairs

    return load_pairs(FIXTURES / "pairs10.jsonl", toy_db)


def run_cli(*args):
    """Run the CLI in-process, capturing stdout/stderr and the exit code."""
    import contextlib
    import io

    from scigispy.cli import main

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main([str(a) for a in args])
    return code, out.getvalue(), err.getvalue()
