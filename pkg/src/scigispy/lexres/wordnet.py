"""Parser for Princeton WordNet 3.0 database files (index.noun/index.verb,
data.noun/data.verb) and hypernym-path traversal over the loaded graph.

Only the fields this package needs are kept: synset ids, member lemmas and
hypernym pointers ("@" plus instance hypernyms "@i").  Path lengths count
nodes, so a root synset by itself has path length 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ..errors import DataError

HYPERNYM_SYMBOLS = ("@", "@i")


@dataclass(frozen=True, order=True)
class SynsetId:
    offset: int
    pos: str  # "n" or "v"

    def __str__(self):
        return f"{self.offset:08d}-{self.pos}"


@dataclass
class Synset:
    id: SynsetId
    lemmas: frozenset[str]
    hypernyms: tuple[SynsetId, ...]

    @property
    def is_root(self):
        return not self.hypernyms


class WordNetDb:
    """Immutable synset store plus (lemma, pos) index.  Derived quantities
    (path lengths, representative paths, per-root scales) are memoized on
    first use; all memo writes are idempotent, so concurrent readers are
    safe."""

    def __init__(self, synsets: dict[SynsetId, Synset], index: dict[tuple[str, str], list[SynsetId]]):
        self.synsets = synsets
        self.index = index
        self._path_lengths: dict[SynsetId, tuple[int, ...]] = {}
        self._path_stats: dict[SynsetId, tuple[int, int]] = {}
        self._representatives: dict[SynsetId, tuple[int, SynsetId]] = {}
        self._root_scales: dict[SynsetId, int] | None = None

    def __len__(self):
        return len(self.synsets)

    def has_lemma(self, lemma: str, pos: str) -> bool:
        return (lemma, pos) in self.index

    def lookup(self, lemma: str, pos: str) -> list[SynsetId]:
        return self.index.get((lemma, pos), [])

    def roots(self, pos: str) -> list[SynsetId]:
        return sorted(sid for sid, syn in self.synsets.items() if sid.pos == pos and syn.is_root)


def _parse_data_line(line, pos, fname, lineno):
    head = line.split("|", 1)[0]
    fields = head.split()
    try:
        offset = int(fields[0])
        ss_type = fields[2]
        w_cnt = int(fields[3], 16)
        words = [fields[4 + 2 * i].lower() for i in range(w_cnt)]
        p_idx = 4 + 2 * w_cnt
        p_cnt = int(fields[p_idx])
        hypernyms = []
        for i in range(p_cnt):
            symbol = fields[p_idx + 1 + 4 * i]
            target_offset = fields[p_idx + 2 + 4 * i]
            target_pos = fields[p_idx + 3 + 4 * i]
            if symbol in HYPERNYM_SYMBOLS and target_pos == pos:
                hypernyms.append(SynsetId(int(target_offset), pos))
    except (IndexError, ValueError) as exc:
        raise DataError(f"{fname}: line {lineno}: malformed data line") from exc
    if ss_type != pos:
        raise DataError(f"{fname}: line {lineno}: synset type {ss_type!r} in {pos!r} data file")
    return Synset(SynsetId(offset, pos), frozenset(words), tuple(hypernyms))


def _parse_index_line(line, pos, fname, lineno):
    fields = line.split()
    try:
        lemma = fields[0].lower()
        synset_cnt = int(fields[2])
        offsets = fields[-synset_cnt:]
        ids = [SynsetId(int(o), pos) for o in offsets]
    except (IndexError, ValueError) as exc:
        raise DataError(f"{fname}: line {lineno}: malformed index line") from exc
    if len(ids) != synset_cnt or synset_cnt == 0:
        raise DataError(f"{fname}: line {lineno}: synset count mismatch")
    return lemma, ids


def parse_wordnet_db(directory) -> WordNetDb:
    """Load index.noun/index.verb and data.noun/data.verb from a directory.

    License header lines (starting with two spaces) are skipped.  The load
    fails on missing files, malformed lines, index entries pointing at
    unknown synsets, hypernym pointers to unknown synsets, and hypernym
    cycles.
    """
    directory = Path(directory)
    synsets: dict[SynsetId, Synset] = {}
    for pos, fname in (("n", "data.noun"), ("v", "data.verb")):
        path = directory / fname
        if not path.is_file():
            raise DataError(f"missing WordNet file: {path}")
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if line.startswith("  ") or not line.strip():
                    continue
                synset = _parse_data_line(line, pos, fname, lineno)
                synsets[synset.id] = synset

    index: dict[tuple[str, str], list[SynsetId]] = {}
    for pos, fname in (("n", "index.noun"), ("v", "index.verb")):
        path = directory / fname
        if not path.is_file():
            raise DataError(f"missing WordNet file: {path}")
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if line.startswith("  ") or not line.strip():
                    continue
                lemma, ids = _parse_index_line(line, pos, fname, lineno)
                for sid in ids:
                    if sid not in synsets:
                        raise DataError(
                            f"{fname}: line {lineno}: offset mismatch, "
                            f"index references unknown synset {sid}"
                        )
                index[(lemma, pos)] = ids

    for synset in synsets.values():
        for h in synset.hypernyms:
            if h not in synsets:
                raise DataError(f"synset {synset.id} has unknown hypernym {h}")
    _check_acyclic(synsets)
    return WordNetDb(synsets, index)


def _check_acyclic(synsets):
    # iterative three-color DFS over hypernym edges
    WHITE, GRAY, BLACK = 0, 1, 2
    color = dict.fromkeys(synsets, WHITE)
    for start in synsets:
        if color[start] != WHITE:
            continue
        stack = [(start, iter(synsets[start].hypernyms))]
        color[start] = GRAY
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == GRAY:
                    raise DataError(f"hypernym cycle detected at synset {nxt}")
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, iter(synsets[nxt].hypernyms)))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()


def hypernym_paths(db: WordNetDb, sid: SynsetId) -> list[list[SynsetId]]:
    """All paths from a synset to a root, each path listed from the synset
    itself up to (and including) the root.  Output order is deterministic:
    sorted by root offset, then lexicographically by the path's offsets."""
    if sid not in db.synsets:
        raise DataError(f"unknown synset {sid}")
    paths: list[list[SynsetId]] = []

    def walk(cur, acc):
        acc = acc + [cur]
        hypernyms = db.synsets[cur].hypernyms
        if not hypernyms:
            paths.append(acc)
            return
        for h in hypernyms:
            walk(h, acc)

    walk(sid, [])
    paths.sort(key=lambda p: (p[-1].offset, [s.offset for s in p]))
    return paths


def path_lengths(db: WordNetDb, sid: SynsetId) -> tuple[int, ...]:
    """Lengths (node counts) of all hypernym paths of a synset; memoized.
    Materializes one entry per path, which grows exponentially with nested
    multiple inheritance; use path_stats/mean_path_length for aggregate
    quantities on large graphs."""
    memo = db._path_lengths
    cached = memo.get(sid)
    if cached is not None:
        return cached
    synset = db.synsets[sid]
    if synset.is_root:
        result = (1,)
    else:
        result = tuple(n + 1 for h in synset.hypernyms for n in path_lengths(db, h))
    memo[sid] = result
    return result


def path_stats(db: WordNetDb, sid: SynsetId) -> tuple[int, int]:
    """(number of root paths, total node count over all root paths), without
    enumerating the paths.  Path counts grow exponentially with multiple
    inheritance, so the mean length must come from this pair, not from
    materialized length lists.  Exact integer arithmetic; memoized."""
    memo = db._path_stats
    cached = memo.get(sid)
    if cached is not None:
        return cached
    synset = db.synsets[sid]
    if synset.is_root:
        result = (1, 1)
    else:
        count = 0
        total = 0
        for h in synset.hypernyms:
            h_count, h_total = path_stats(db, h)
            count += h_count
            total += h_total + h_count  # this synset adds one node per path
        result = (count, total)
    memo[sid] = result
    return result


def mean_path_length(db: WordNetDb, sid: SynsetId) -> float:
    count, total = path_stats(db, sid)
    return total / count


def representative_path(db: WordNetDb, sid: SynsetId) -> tuple[int, SynsetId]:
    """The synset's representative: length and root of its longest hypernym
    path, ties broken toward the larger root offset."""
    memo = db._representatives
    cached = memo.get(sid)
    if cached is not None:
        return cached
    synset = db.synsets[sid]
    if synset.is_root:
        result = (1, sid)
    else:
        best = None
        for h in synset.hypernyms:
            length, root = representative_path(db, h)
            cand = (length + 1, root)
            if best is None or (cand[0], cand[1].offset) > (best[0], best[1].offset):
                best = cand
        result = best
    memo[sid] = result
    return result


def root_scales(db: WordNetDb) -> dict[SynsetId, int]:
    """Per-root normalization scale: the maximum representative path length
    of any synset whose representative ends at that root."""
    if db._root_scales is None:
        scales: dict[SynsetId, int] = {}
        for sid in db.synsets:
            length, root = representative_path(db, sid)
            if length > scales.get(root, 0):
                scales[root] = length
        db._root_scales = scales
    return db._root_scales
