"""Evaluation protocols: paired score differences with aggregate
statistics, two-group Student t-tests, surface readability formulas and
Pearson correlation.

Conventions: a pair's difference is simplified minus original
(pls - abs); "positive" uses strict > 0; the t-test pools variance with
df = n1 + n2 - 2 (a Welch variant is available behind a flag).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus import Document
from .errors import DataError
from .special import student_t_two_sided_p


@dataclass
class PairOutcome:
    pair_id: str
    gis_abs: float
    gis_pls: float
    diff: float


@dataclass
class CompareReport:
    mean_diff: float
    pct_positive: float
    pct_increased: float | None = None
    pct_neg_to_pos: float | None = None
    n: int = 0


@dataclass
class TTestReport:
    distance: float  # mean(group1) - mean(group2)
    t: float
    p: float
    df: float


@dataclass
class CorrelationReport:
    r_gis_fkgl: float
    r_gis_ari: float
    n: int


def gis_difference(abs_score: float, pls_score: float) -> float:
    return pls_score - abs_score


def make_outcome(pair_id, abs_score, pls_score) -> PairOutcome:
    return PairOutcome(
        pair_id=pair_id,
        gis_abs=abs_score,
        gis_pls=pls_score,
        diff=gis_difference(abs_score, pls_score),
    )


def pair_stats(outcomes: list[PairOutcome], baseline: list[PairOutcome] | None = None) -> CompareReport:
    """Aggregate pair differences: the mean difference and the share of
    strictly positive differences; against a baseline run over the same
    pairs, also the share of pairs whose difference increased and the share
    that flipped from negative to positive."""
    if not outcomes:
        raise DataError("no pair outcomes to aggregate")
    n = len(outcomes)
    mean_diff = math.fsum(o.diff for o in outcomes) / n
    pct_positive = 100.0 * sum(1 for o in outcomes if o.diff > 0) / n
    report = CompareReport(mean_diff=mean_diff, pct_positive=pct_positive, n=n)
    if baseline is not None:
        base_by_id = {o.pair_id: o for o in baseline}
        if set(base_by_id) != {o.pair_id for o in outcomes} or len(baseline) != n:
            raise DataError("baseline outcomes cover a different pair_id set")
        increased = 0
        neg_to_pos = 0
        for o in outcomes:
            b = base_by_id[o.pair_id]
            if o.diff > b.diff:
                increased += 1
            if b.diff < 0 and o.diff > 0:
                neg_to_pos += 1
        report.pct_increased = 100.0 * increased / n
        report.pct_neg_to_pos = 100.0 * neg_to_pos / n
    return report


def _word_tokens(doc):
    return [t for t in doc.tokens() if t.is_word]


def fkgl(doc: Document) -> float:
    """Flesch-Kincaid grade level:
    0.39 * words/sentences + 11.8 * syllables/words - 15.59."""
    sentences = len(doc.sentences)
    words = _word_tokens(doc)
    if sentences == 0 or not words:
        raise DataError(f"document {doc.doc_id!r} has no word tokens")
    syllables = sum(t.syllable_count for t in words)
    return 0.39 * (len(words) / sentences) + 11.8 * (syllables / len(words)) - 15.59


def ari(doc: Document) -> float:
    """Automated readability index:
    4.71 * characters/words + 0.5 * words/sentences - 21.43, counting
    letters and digits of word tokens as characters."""
    sentences = len(doc.sentences)
    words = _word_tokens(doc)
    if sentences == 0 or not words:
        raise DataError(f"document {doc.doc_id!r} has no word tokens")
    characters = sum(1 for t in words for c in t.surface if c.isalnum())
    return 4.71 * (characters / len(words)) + 0.5 * (len(words) / sentences) - 21.43


def pearson(xs, ys) -> float:
    """Sample Pearson correlation; raises on length mismatch, fewer than
    two points, or a constant series."""
    if len(xs) != len(ys):
        raise DataError(f"length mismatch: {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 2:
        raise DataError("need at least two points")
    mean_x = math.fsum(xs) / n
    mean_y = math.fsum(ys) / n
    dx = [x - mean_x for x in xs]
    dy = [y - mean_y for y in ys]
    sxx = math.fsum(d * d for d in dx)
    syy = math.fsum(d * d for d in dy)
    if sxx == 0.0 or syy == 0.0:
        raise DataError("undefined correlation: constant series")
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    return sxy / math.sqrt(sxx * syy)


def ttest_ind(group1, group2, welch: bool = False) -> TTestReport:
    """Two-sample t-test of mean(group1) - mean(group2).  The default pools
    variance (Student); welch=True uses the unequal-variance statistic with
    Welch-Satterthwaite degrees of freedom.  Zero pooled variance yields
    t=0, p=1 when the means agree and is an error otherwise."""
    n1, n2 = len(group1), len(group2)
    if n1 < 2 or n2 < 2:
        raise DataError("each group needs at least two observations")
    mean1 = math.fsum(group1) / n1
    mean2 = math.fsum(group2) / n2
    ss1 = math.fsum((x - mean1) ** 2 for x in group1)
    ss2 = math.fsum((x - mean2) ** 2 for x in group2)
    distance = mean1 - mean2
    if welch:
        v1 = ss1 / (n1 - 1)
        v2 = ss2 / (n2 - 1)
        se_sq = v1 / n1 + v2 / n2
        if se_sq == 0.0:
            if distance == 0.0:
                return TTestReport(distance=0.0, t=0.0, p=1.0, df=n1 + n2 - 2)
            raise DataError("degenerate variance: groups are constant but means differ")
        df = se_sq**2 / ((v1 / n1) ** 2 / (n1 - 1) + (v2 / n2) ** 2 / (n2 - 1))
        t = distance / math.sqrt(se_sq)
    else:
        df = n1 + n2 - 2
        pooled = (ss1 + ss2) / df
        if pooled == 0.0:
            if distance == 0.0:
                return TTestReport(distance=0.0, t=0.0, p=1.0, df=df)
            raise DataError("degenerate variance: groups are constant but means differ")
        t = distance / math.sqrt(pooled * (1.0 / n1 + 1.0 / n2))
    p = student_t_two_sided_p(t, df)
    return TTestReport(distance=distance, t=t, p=p, df=df)


def correlate_readability(scores: list[tuple[float, float, float]]) -> CorrelationReport:
    """Pearson correlation of the score against both readability formulas,
    from (gis, fkgl, ari) triples."""
    if len(scores) < 2:
        raise DataError("need at least two documents to correlate")
    gis_values = [s[0] for s in scores]
    fkgl_values = [s[1] for s in scores]
    ari_values = [s[2] for s in scores]
    return CorrelationReport(
        r_gis_fkgl=pearson(gis_values, fkgl_values),
        r_gis_ari=pearson(gis_values, ari_values),
        n=len(scores),
    )
