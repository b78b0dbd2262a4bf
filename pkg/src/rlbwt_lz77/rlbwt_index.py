"""Dynamic run-length BWT index.

The terminator ``#`` (byte 0) is never stored in the run-length string; its
row is tracked separately in ``term_row``.  ``extend`` then reduces to one
rank and one insert: the symbol takes over the old terminator row and a new
terminator row is computed.
"""

from .dynamic_strings import RunLengthString
from .errors import CorruptIndexError, MalformedRunsError

TERM = 0  # '#', sorts before everything
EOT = 1  # '$'
SIGMA = 256


class SymbolTotals:
    """Fenwick tree over the 256 byte symbols."""

    def __init__(self):
        self._tree = [0] * (SIGMA + 1)
        self._counts = [0] * SIGMA

    def add(self, sym, delta=1):
        self._counts[sym] += delta
        i = sym + 1
        tree = self._tree
        while i <= SIGMA:
            tree[i] += delta
            i += i & -i

    def __getitem__(self, sym):
        return self._counts[sym]

    def smaller(self, sym):
        """Number of symbols strictly smaller than ``sym`` (the C-array)."""
        i = sym
        tree = self._tree
        acc = 0
        while i > 0:
            acc += tree[i]
            i -= i & -i
        return acc

    def symbol_at(self, row):
        """``(sym, C[sym])`` for the symbol whose F-block contains ``row``."""
        tree = self._tree
        pos = 0
        rest = row
        step = SIGMA
        while step:
            nxt = pos + step
            if nxt <= SIGMA and tree[nxt] <= rest:
                pos = nxt
                rest -= tree[nxt]
            step >>= 1
        return pos, row - rest

    def as_dict(self):
        return {s: c for s, c in enumerate(self._counts) if c}


class RLBWTIndex:
    """Run-length BWT with LF/FL mappings and online extension.

    ``L`` holds every BWT symbol except ``#``, which sits at ``term_row``.
    """

    def __init__(self, L, term_row, totals):
        self.L = L
        self.term_row = term_row
        self.char_totals = totals

    @classmethod
    def new_empty(cls):
        """Index of the empty text: ``L = "#"``."""
        totals = SymbolTotals()
        totals.add(TERM)
        return cls(RunLengthString(), 0, totals)

    @classmethod
    def from_runs(cls, runs):
        """Index whose BWT is the concatenation of ``(length, symbol)`` runs."""
        L = RunLengthString()
        totals = SymbolTotals()
        term_row = None
        eot = 0
        prev = None
        row = 0
        for k, (length, sym) in enumerate(runs):
            if not isinstance(length, int) or length < 1:
                raise MalformedRunsError(f"run {k}: length must be a positive integer")
            if not 0 <= sym < SIGMA:
                raise MalformedRunsError(f"run {k}: symbol {sym!r} is not a byte")
            if sym == prev:
                raise MalformedRunsError(f"run {k}: repeats the symbol of run {k - 1}")
            prev = sym
            if sym == TERM:
                if length != 1 or term_row is not None:
                    raise MalformedRunsError("exactly one '#' is required")
                term_row = row
            else:
                if sym == EOT:
                    eot += length
                L.append_run(sym, length)
            totals.add(sym, length)
            row += length
        if term_row is None:
            raise MalformedRunsError("no '#' run")
        if eot != 1:
            raise MalformedRunsError(f"expected one '$', found {eot}")
        return cls(L, term_row, totals)

    def __len__(self):
        return len(self.L) + 1

    @property
    def n(self):
        return len(self.L) + 1

    @property
    def runs(self):
        """Number of maximal runs of the BWT including the ``#`` row."""
        return sum(1 for _ in self.iter_runs())

    def __repr__(self):
        return f"RLBWTIndex(n={self.n}, stored_runs={self.L.runs}, term_row={self.term_row})"

    def _check_row(self, i, upper=None):
        upper = self.n if upper is None else upper
        if not 0 <= i < upper:
            raise IndexError(f"row {i} out of range [0, {upper})")

    # -- column access ---------------------------------------------------

    def access(self, i):
        """L[i]."""
        self._check_row(i)
        p = self.term_row
        if i == p:
            return TERM
        return self.L.access(i if i < p else i - 1)

    def first(self, i):
        """F[i], the symbol row ``i`` starts with."""
        self._check_row(i)
        return self.char_totals.symbol_at(i)[0]

    def rank(self, sym, i):
        """Occurrences of ``sym`` in L[0:i]."""
        self._check_row(i, self.n + 1)
        p = self.term_row
        if sym == TERM:
            return 1 if i > p else 0
        return self.L.rank(sym, i if i <= p else i - 1)

    def select(self, sym, k):
        if sym == TERM:
            if k != 0:
                raise IndexError("'#' occurs once")
            return self.term_row
        pos = self.L.select(sym, k)
        return pos if pos < self.term_row else pos + 1

    def iter_L(self):
        row = 0
        for sym, length in self.L.iter_runs():
            for _ in range(length):
                if row == self.term_row:
                    yield TERM
                    row += 1
                yield sym
                row += 1
        if row == self.term_row:
            yield TERM

    def iter_runs(self):
        """Maximal ``(length, symbol)`` runs of L, ``#`` included."""
        p = self.term_row
        w = 0
        for sym, length in self.L.iter_runs():
            if w <= p < w + length:
                head = p - w
                if head:
                    yield head, sym
                yield 1, TERM
                yield length - head, sym
            else:
                yield length, sym
            w += length
        if w == p:
            yield 1, TERM

    def to_runs(self):
        return list(self.iter_runs())

    # -- mappings --------------------------------------------------------

    def lf(self, i):
        """Row of the rotation one text position to the left of row ``i``."""
        self._check_row(i)
        p = self.term_row
        if i == p:
            return 0
        sym, r = self.L.access_rank(i if i < p else i - 1)
        return self.char_totals.smaller(sym) + r

    def access_lf(self, i):
        """``(L[i], lf(i))`` with one tree descent."""
        self._check_row(i)
        p = self.term_row
        if i == p:
            return TERM, 0
        sym, r = self.L.access_rank(i if i < p else i - 1)
        return sym, self.char_totals.smaller(sym) + r

    def fl(self, i):
        """Inverse of ``lf``."""
        self._check_row(i)
        sym, c = self.char_totals.symbol_at(i)
        return self.select(sym, i - c)

    def first_fl(self, i):
        """``(F[i], fl(i))``."""
        self._check_row(i)
        sym, c = self.char_totals.symbol_at(i)
        return sym, self.select(sym, i - c)

    def backward_step(self, lo, hi, sym):
        """Row interval of ``sym + W`` given the interval ``[lo, hi)`` of ``W``."""
        if not 0 <= lo <= hi <= self.n:
            raise IndexError(f"interval [{lo}, {hi}) outside [0, {self.n}]")
        c = self.char_totals.smaller(sym)
        return c + self.rank(sym, lo), c + self.rank(sym, hi)

    def run_at(self, i):
        """``(start, length, symbol)`` of the maximal L-run covering row ``i``."""
        self._check_row(i)
        p = self.term_row
        if i == p:
            return p, 1, TERM
        start, length, sym = self.L.run_at(i if i < p else i - 1)
        if start < p < start + length:
            # '#' splits this stored run in two
            if i < p:
                return start, p - start, sym
            return p + 1, start + length - p, sym
        if start >= p:
            start += 1
        return start, length, sym

    # -- construction ----------------------------------------------------

    def extend(self, sym):
        """Turn BWT(X) into BWT(sym + X); return the new terminator row."""
        if sym == TERM or not 0 <= sym < SIGMA:
            raise ValueError(f"cannot extend with symbol {sym!r}")
        p = self.term_row
        row = self.char_totals.smaller(sym) + self.L.rank(sym, p)
        self.L.insert(p, sym)
        self.char_totals.add(sym)
        self.term_row = row
        return row

    def extract_forward(self):
        """Yield the text from the ``#`` row onwards by walking FL."""
        n = self.n
        row = 0
        for step in range(n):
            sym, nxt = self.first_fl(row)
            if step == 0 and sym != TERM:
                raise CorruptIndexError("row 0 does not start with '#'")
            if step and nxt == 0 and step != n - 1:
                raise CorruptIndexError("FL cycle shorter than the text")
            yield sym
            row = nxt
        if row != 0:
            raise CorruptIndexError("FL walk did not return to the '#' row")

    def check(self):
        """Cross-check cached totals and structure against a full scan."""
        self.L.check()
        scan = {}
        for sym in self.iter_L():
            scan[sym] = scan.get(sym, 0) + 1
        assert scan == self.char_totals.as_dict(), "char totals out of sync"
        assert scan.get(TERM) == 1
