"""Information-content tables over a WordNet hierarchy.

A table maps synsets to occurrence probabilities; the information content
of a synset is -ln(p).  Probabilities either come from corpus lemma counts
propagated up the hypernym graph (each count credited, split equally across
the lemma's synsets, to every ancestor once per synset) or from a
precomputed count file in the conventional "<offset><pos> <count> [ROOT]"
layout.  Counts are accumulated as exact rationals so equal inputs always
produce bit-identical tables.
"""

from __future__ import annotations

import logging
import math
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ..errors import DataError
from .wordnet import SynsetId, WordNetDb

log = logging.getLogger(__name__)


@dataclass
class IcTable:
    prob: dict[SynsetId, float]
    smoothing: float = 0.0
    uncovered: int = 0  # lemma entries with no synset (build_ic only)
    skipped: int = 0    # unusable file lines (load_ic_file only)

    def ic(self, sid: SynsetId) -> float | None:
        """-ln(p) for synsets with probability mass, None otherwise."""
        p = self.prob.get(sid)
        if p is None or p <= 0.0:
            return None
        return -math.log(p)

    def __contains__(self, sid):
        return sid in self.prob


def _ancestor_closure(db, sid, memo):
    cached = memo.get(sid)
    if cached is not None:
        return cached
    closure = {sid}
    for h in db.synsets[sid].hypernyms:
        closure |= _ancestor_closure(db, h, memo)
    result = frozenset(closure)
    memo[sid] = result
    return result


def build_ic(db: WordNetDb, lemma_counts: dict[tuple[str, str], float], smoothing=0) -> IcTable:
    """Build a probability table from (lemma, pos) -> count observations.

    Each count is split equally across the lemma's synsets; each share is
    credited to the synset and every one of its ancestors exactly once
    (multiple inheritance does not double-count).  The probability of a
    synset is (credit + smoothing) / (root total of its POS + smoothing).
    Counts for lemmas absent from the database land in the `uncovered`
    tally instead of raising.
    """
    credit: dict[SynsetId, Fraction] = defaultdict(Fraction)
    closure_memo: dict[SynsetId, frozenset[SynsetId]] = {}
    uncovered = 0
    for (lemma, pos), count in sorted(lemma_counts.items()):
        if count < 0:
            raise ValueError(f"negative count for ({lemma!r}, {pos!r})")
        if count == 0:
            continue
        synsets = db.lookup(lemma, pos)
        if not synsets:
            uncovered += 1
            continue
        share = Fraction(count) / len(synsets)
        for sid in synsets:
            for ancestor in _ancestor_closure(db, sid, closure_memo):
                credit[ancestor] += share

    smoothing = Fraction(smoothing)
    root_total: dict[str, Fraction] = {"n": Fraction(0), "v": Fraction(0)}
    for sid, c in credit.items():
        if db.synsets[sid].is_root:
            root_total[sid.pos] += c

    keys = set(credit)
    if smoothing > 0:
        keys |= set(db.synsets)
    prob: dict[SynsetId, float] = {}
    for sid in sorted(keys):
        denominator = root_total[sid.pos] + smoothing
        if denominator == 0:
            continue
        prob[sid] = float((credit.get(sid, Fraction(0)) + smoothing) / denominator)
    if not prob:
        raise DataError("no probability mass: empty counts and zero smoothing")
    return IcTable(prob=prob, smoothing=float(smoothing), uncovered=uncovered)


_IC_LINE = re.compile(r"(\d+)([nv])\s+([0-9eE.+-]+)(\s+ROOT)?\s*$")


def load_ic_file(path, db: WordNetDb) -> IcTable:
    """Load a precomputed count file: one "<offset><pos> <count> [ROOT]"
    entry per line.  Counts are assumed cumulative (already propagated);
    probabilities normalize by the summed ROOT counts of each POS.
    Unparsable lines and offsets unknown to the database are skipped with
    a warning."""
    path = Path(path)
    counts: dict[SynsetId, float] = {}
    root_ids: set[SynsetId] = set()
    skipped = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("wnver"):
                continue
            m = _IC_LINE.fullmatch(stripped)
            if not m:
                log.warning("%s: line %d: unparsable entry skipped", path, lineno)
                skipped += 1
                continue
            offset, pos, value, root_flag = m.groups()
            sid = SynsetId(int(offset), pos)
            if sid not in db.synsets:
                log.warning("%s: line %d: unknown synset %s skipped", path, lineno, sid)
                skipped += 1
                continue
            try:
                counts[sid] = float(value)
            except ValueError:
                log.warning("%s: line %d: unparsable count skipped", path, lineno)
                skipped += 1
                continue
            if root_flag:
                root_ids.add(sid)

    totals = {"n": 0.0, "v": 0.0}
    for sid in root_ids:
        totals[sid.pos] += counts[sid]
    prob: dict[SynsetId, float] = {}
    for sid in sorted(counts):
        total = totals[sid.pos]
        if total <= 0.0:
            raise DataError(f"{path}: zero root total for POS {sid.pos!r}")
        if counts[sid] > 0.0:
            prob[sid] = counts[sid] / total
    if not prob:
        raise DataError(f"{path}: no usable entries")
    return IcTable(prob=prob, smoothing=0.0, skipped=skipped)
