"""Conversions between the run-length BWT and the LZ77 parse of a text.

Neither direction materialises the text: characters are streamed through
dynamic run-length BWT indexes, one LF or FL step at a time.
"""

from dataclasses import dataclass, field

from sortedcontainers import SortedList

from .dyn_function import DynFunction
from .errors import CorruptIndexError, MalformedParseError
from .rlbwt_index import EOT, TERM, RLBWTIndex


@dataclass
class ConversionStats:
    """Space and work counters gathered during a conversion."""

    n: int = 0
    peak_runs: int = 0
    peak_nodes: int = 0
    peak_samples: int = 0
    samples_within_bound: bool = True
    ops: dict = field(default_factory=dict)

    def observe(self, runs, nodes):
        if runs > self.peak_runs:
            self.peak_runs = runs
        if nodes > self.peak_nodes:
            self.peak_nodes = nodes

    def add_ops(self, counter):
        for key, value in counter.items():
            self.ops[key] = self.ops.get(key, 0) + value

    @property
    def total_ops(self):
        return sum(self.ops.values())


def _flush_ops(stats, *structures):
    if stats is not None:
        for s in structures:
            stats.add_ops(s.ops)


class RunSamples:
    """Leftmost and rightmost visited rows of every L-run.

    Runs are keyed by their first row, which is stable because the index
    being scanned is never modified.  Sampled rows are also kept per symbol
    in sorted order so that "is there a visited c-row in [lo, hi)" is a
    single successor query.
    """

    def __init__(self):
        self._runs = {}  # run start -> [left row, right row]
        self._pos = {}  # sampled row -> text position
        self._by_sym = {}

    def __len__(self):
        return len(self._pos)

    @property
    def run_count(self):
        return len(self._runs)

    def _add(self, sym, row, pos):
        self._pos[row] = pos
        rows = self._by_sym.get(sym)
        if rows is None:
            rows = self._by_sym[sym] = SortedList()
        rows.add(row)

    def _drop(self, sym, row):
        del self._pos[row]
        self._by_sym[sym].remove(row)

    def visit(self, row, pos, run_start, sym):
        ends = self._runs.get(run_start)
        if ends is None:
            self._runs[run_start] = [row, row]
            self._add(sym, row, pos)
            return
        left, right = ends
        if row < left:
            if left != right:
                self._drop(sym, left)
            ends[0] = row
            self._add(sym, row, pos)
        elif row > right:
            if left != right:
                self._drop(sym, right)
            ends[1] = row
            self._add(sym, row, pos)

    def find(self, sym, lo, hi):
        """A sampled row of ``sym`` inside ``[lo, hi)`` with its position, or None."""
        rows = self._by_sym.get(sym)
        if not rows:
            return None
        k = rows.bisect_left(lo)
        if k < len(rows) and rows[k] < hi:
            row = rows[k]
            return row, self._pos[row]
        return None

    def check(self):
        assert len(self._pos) <= 2 * len(self._runs)
        for left, right in self._runs.values():
            assert left in self._pos and right in self._pos


def from_runs(runs):
    return RLBWTIndex.from_runs(runs)


def reverse_rlbwt(index, stats=None):
    """Index of the reversed text, built by streaming ``index`` through ``extend``.

    Works in both directions: the BWT is rotation invariant, so the text
    ``#X`` read off ``index`` yields the index of ``reverse(X) + '#'``.
    """
    out = RLBWTIndex.new_empty()
    stream = index.extract_forward()
    next(stream)  # leading '#' is already in the fresh index
    for k, sym in enumerate(stream):
        out.extend(sym)
        if stats is not None and not k & 0xFF:
            stats.observe(out.L.runs + index.L.runs, out.L.node_count + index.L.node_count)
    if stats is not None:
        stats.observe(out.L.runs + index.L.runs, out.L.node_count + index.L.node_count)
    _flush_ops(stats, index.L)
    return out


def iter_lz_factorize(index_rev, stats=None):
    """Stream the greedy LZ77 phrases of T from the BWT of reverse(T).

    Row ``row(t)`` of ``index_rev`` holds the reversed prefix ``T[t]..T[0]``
    and ``L[row(t)] = T[t + 1]``, so LF-walking from row 0 reads T forwards.
    A phrase ``w`` extended by ``c`` has an earlier occurrence iff some row
    of the interval of ``reverse(w)`` with ``L = c`` belongs to a text
    position at most two behind the scan.  A toehold row inside the interval
    answers this when its own L-symbol is ``c``; otherwise the nearest such
    row is a per-run extreme and the samples find it.
    """
    n = index_rev.n
    samples = RunSamples()
    yield (None, 0, TERM)

    row = 0  # row of text position i - 1
    lo, hi = 0, n
    length = 0
    toe_row = toe_pos = None
    for i in range(1, n):
        c, next_row = index_rev.access_lf(row)
        if (c == EOT) != (i == n - 1) or c == TERM:
            raise CorruptIndexError(f"terminator misplaced at text position {i}")
        hit = None
        if length and index_rev.access(toe_row) == c:
            hit = toe_row, toe_pos
        else:
            hit = samples.find(c, lo, hi)
        if hit is not None:
            lo, hi = index_rev.backward_step(lo, hi, c)
            toe_row = index_rev.lf(hit[0])
            toe_pos = hit[1] + 1
            length += 1
        else:
            src = toe_pos - length + 1 if length else None
            yield (src, length, c)
            lo, hi = 0, n
            length = 0
            toe_row = toe_pos = None

        run_start, _, sym = index_rev.run_at(row)
        samples.visit(row, i - 1, run_start, sym)
        if stats is not None:
            live = len(samples)
            if live > stats.peak_samples:
                stats.peak_samples = live
            if live > 2 * samples.run_count:
                stats.samples_within_bound = False
        row = next_row
    _flush_ops(stats, index_rev.L)


def lz_factorize(index_rev, stats=None):
    return list(iter_lz_factorize(index_rev, stats))


def iter_rlbwt_to_lz77(runs, stats=None):
    index = from_runs(runs)
    if stats is not None:
        stats.n = index.n
    rev = reverse_rlbwt(index, stats)
    del index
    yield from iter_lz_factorize(rev, stats)
    if stats is not None:
        stats.observe(rev.L.runs, rev.L.node_count)


def rlbwt_to_lz77(runs, stats=None):
    """LZ77 parse of T from its run-length BWT, in O(r) words."""
    return list(iter_rlbwt_to_lz77(runs, stats))


def _validate_head(parse):
    if not parse:
        raise MalformedParseError("empty parse")
    first = tuple(parse[0])
    if first != (None, 0, TERM):
        raise MalformedParseError("first phrase must be the literal '#'")
    last = tuple(parse[-1])
    if last[2] != EOT:
        raise MalformedParseError("last phrase must end with '$'")


def build_reverse_index(parse, stats=None, on_step=None):
    """Decode ``parse`` straight into the BWT index of the reversed text.

    Sources are translated to rows through a ``DynFunction``; copied
    symbols are read from the first column and the copy cursor advances
    with LF, so no decoded text is ever stored.  ``on_step(i, row, index,
    fn)`` is called after each text position is inserted.
    """
    _validate_head(parse)
    fn = DynFunction(p[0] for p in parse)
    index = RLBWTIndex.new_empty()
    sources = fn.domain
    nxt = 0  # next unassigned source in sorted order

    def place(i, row):
        nonlocal nxt
        if nxt < len(sources) and sources[nxt] == i:
            fn.assign(i, row)
            nxt += 1
        else:
            fn.expand(row)

    place(0, 0)
    if on_step is not None:
        on_step(0, 0, index, fn)
    i = 1
    z = len(parse)
    for v in range(1, z):
        src, length, sym = parse[v]
        last = v == z - 1
        if (src is None) != (length == 0):
            raise MalformedParseError(f"phrase {v}: length 0 iff source is NULL")
        if length:
            if not 0 <= src < i:
                raise MalformedParseError(f"phrase {v}: source {src} not before position {i}")
            cur = fn.map(src)
            for _ in range(length):
                c = index.first(cur)
                if c in (TERM, EOT):
                    raise MalformedParseError(f"phrase {v} copies a terminator")
                row = index.extend(c)
                place(i, row)
                if on_step is not None:
                    on_step(i, row, index, fn)
                if row <= cur:
                    cur += 1
                cur = index.lf(cur)
                i += 1
        if sym == TERM or (sym == EOT) != last:
            raise MalformedParseError(f"phrase {v}: misplaced terminator symbol {sym}")
        row = index.extend(sym)
        place(i, row)
        if on_step is not None:
            on_step(i, row, index, fn)
        i += 1
        if stats is not None and not v & 0x3F:
            stats.observe(index.L.runs, index.L.node_count + fn.perm.node_count + fn.C.runs)
    if stats is not None:
        stats.n = i
        stats.observe(index.L.runs, index.L.node_count + fn.perm.node_count + fn.C.runs)
        stats.add_ops(fn.C.ops)
        stats.add_ops(fn.perm.ops)
    return index


def lz77_to_rlbwt(parse, stats=None):
    """Run-length BWT of T from its LZ77 parse, in O(r + z) words."""
    parse = list(parse)
    rev = build_reverse_index(parse, stats)
    fwd = reverse_rlbwt(rev, stats)
    _flush_ops(stats, fwd.L)
    return fwd.to_runs()
