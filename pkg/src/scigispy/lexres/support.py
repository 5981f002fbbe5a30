"""Rating lexicons (concreteness/imageability) and connective pattern
lists, plus the combined loader for the optional support files."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..errors import DataError
from .vectors import load_sidecar


@dataclass
class RatingLexicon:
    ratings: dict[str, tuple[float, float]]  # word -> (concreteness, imageability)

    def get(self, word: str):
        return self.ratings.get(word.lower())

    def __len__(self):
        return len(self.ratings)


def load_rating_lexicon(path) -> RatingLexicon:
    """TSV "word<TAB>concreteness<TAB>imageability"; a first line whose
    second column is non-numeric is treated as a header."""
    path = Path(path)
    ratings: dict[str, tuple[float, float]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            cols = line.rstrip("\n").split("\t")
            if len(cols) < 3:
                raise DataError(f"{path}: line {lineno}: expected 3 tab-separated columns")
            if lineno == 1:
                try:
                    float(cols[1])
                except ValueError:
                    continue  # header
            try:
                concreteness = float(cols[1])
                imageability = float(cols[2])
            except ValueError as exc:
                raise DataError(f"{path}: line {lineno}: non-numeric rating") from exc
            if not (math.isfinite(concreteness) and math.isfinite(imageability)):
                raise DataError(f"{path}: line {lineno}: non-finite rating")
            ratings[cols[0].lower()] = (concreteness, imageability)
    if not ratings:
        raise DataError(f"{path}: no lexicon entries")
    return RatingLexicon(ratings=ratings)


class ConnectivePatterns:
    """Case-insensitive literal phrase matcher with word-boundary anchoring.
    Longer patterns win at a shared start ("so that" over "so"); matches
    never overlap."""

    def __init__(self, patterns):
        patterns = [p for p in patterns if p]
        if not patterns:
            raise DataError("empty connective pattern list")
        self.patterns = list(patterns)
        ordered = sorted(set(patterns), key=lambda p: (-len(p), p))
        alternation = "|".join(r"\s+".join(re.escape(w) for w in p.split()) for p in ordered)
        self._regex = re.compile(rf"\b(?:{alternation})\b", re.IGNORECASE)

    def count(self, text: str) -> int:
        return sum(1 for _ in self._regex.finditer(text))

    def __len__(self):
        return len(self.patterns)


def _parse_pattern_lines(lines):
    patterns = []
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            patterns.append(line.lower())
    return patterns


def load_connectives(path) -> ConnectivePatterns:
    """One pattern per line; '#' comments and blank lines are ignored."""
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        patterns = _parse_pattern_lines(fh)
    if not patterns:
        raise DataError(f"{path}: no connective patterns")
    return ConnectivePatterns(patterns)


def default_connectives() -> ConnectivePatterns:
    """The causal/intentional connective list shipped with the package."""
    text = resources.files("scigispy").joinpath("data", "connectives.txt").read_text("utf-8")
    return ConnectivePatterns(_parse_pattern_lines(text.splitlines()))


def load_support_files(rating_lexicon_file=None, connectives_file=None, sidecar_file=None):
    """Load whichever optional support files are given; absent ones come
    back as None.  Returns (RatingLexicon?, ConnectivePatterns?,
    SidecarSource?)."""
    lexicon = load_rating_lexicon(rating_lexicon_file) if rating_lexicon_file else None
    connectives = load_connectives(connectives_file) if connectives_file else None
    sidecar = load_sidecar(sidecar_file) if sidecar_file else None
    return lexicon, connectives, sidecar
