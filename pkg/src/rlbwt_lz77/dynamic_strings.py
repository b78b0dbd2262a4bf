"""Dynamic run-length encoded strings and gap-encoded bitvectors.

Runs are kept as nodes of a treap ordered by position.  Every node carries
the aggregates of its subtree: symbol count, run count and a per-symbol
count table, so access/rank/select/insert all cost O(log r) where r is the
number of maximal runs.
"""

import random

OPS = ("access", "rank", "select", "insert")


class _Run:
    __slots__ = ("sym", "len", "prio", "left", "right", "parent", "tot", "nrun", "cnt")

    def __init__(self, sym, length, prio):
        self.sym = sym
        self.len = length
        self.prio = prio
        self.left = None
        self.right = None
        self.parent = None
        self.tot = length
        self.nrun = 1
        self.cnt = {sym: length}


def _pull(x):
    tot = x.len
    nrun = 1
    cnt = {x.sym: x.len}
    for ch in (x.left, x.right):
        if ch is not None:
            tot += ch.tot
            nrun += ch.nrun
            for s, v in ch.cnt.items():
                cnt[s] = cnt.get(s, 0) + v
    x.tot = tot
    x.nrun = nrun
    x.cnt = cnt


class RunLengthString:
    """Mutable byte-symbol sequence stored as maximal equal-letter runs.

    >>> s = RunLengthString(b"aab")
    >>> s.access(2), s.rank(ord("a"), 2), s.select(ord("b"), 0), s.runs
    (98, 2, 2, 2)
    """

    def __init__(self, symbols=(), seed=0x5EED):
        self._root = None
        self._rng = random.Random(seed)
        self.ops = dict.fromkeys(OPS, 0)
        for sym in symbols:
            self.insert(len(self), sym)

    @classmethod
    def from_runs(cls, runs, seed=0x5EED):
        """Build from ``(length, symbol)`` pairs, merging equal neighbours."""
        s = cls(seed=seed)
        for length, sym in runs:
            if length > 0:
                s.append_run(sym, length)
        return s

    def __len__(self):
        return 0 if self._root is None else self._root.tot

    def __iter__(self):
        for sym, length in self.iter_runs():
            for _ in range(length):
                yield sym

    def __repr__(self):
        return f"RunLengthString(n={len(self)}, runs={self.runs})"

    @property
    def runs(self):
        return 0 if self._root is None else self._root.nrun

    @property
    def node_count(self):
        # one treap node per stored run
        return self.runs

    def count(self, sym):
        return 0 if self._root is None else self._root.cnt.get(sym, 0)

    def totals(self):
        """Per-symbol counts as a fresh dict."""
        return {} if self._root is None else {s: v for s, v in self._root.cnt.items() if v}

    def iter_runs(self):
        """Yield ``(symbol, length)`` for every stored run, left to right."""
        stack = []
        x = self._root
        while stack or x is not None:
            while x is not None:
                stack.append(x)
                x = x.left
            x = stack.pop()
            yield x.sym, x.len
            x = x.right

    # -- queries ---------------------------------------------------------

    def _find(self, pos):
        """Node holding ``pos`` with the offset inside it and its start."""
        x = self._root
        start = 0
        while True:
            left = x.left
            ls = 0 if left is None else left.tot
            if pos < ls:
                x = left
            elif pos < ls + x.len:
                return x, pos - ls, start + ls
            else:
                pos -= ls + x.len
                start += ls + x.len
                x = x.right

    def _check(self, pos, upper):
        if not 0 <= pos < upper:
            raise IndexError(f"position {pos} out of range [0, {upper})")

    def access(self, pos):
        self.ops["access"] += 1
        self._check(pos, len(self))
        return self._find(pos)[0].sym

    def rank(self, sym, pos):
        """Occurrences of ``sym`` strictly before ``pos``."""
        self.ops["rank"] += 1
        n = len(self)
        self._check(pos, n + 1)
        if pos == n:
            return self.count(sym)
        x = self._root
        acc = 0
        while True:
            left = x.left
            ls = 0 if left is None else left.tot
            if pos < ls:
                x = left
                continue
            if left is not None:
                acc += left.cnt.get(sym, 0)
            if pos < ls + x.len:
                if x.sym == sym:
                    acc += pos - ls
                return acc
            if x.sym == sym:
                acc += x.len
            pos -= ls + x.len
            x = x.right

    def select(self, sym, k):
        """Position of the occurrence of ``sym`` preceded by ``k`` others."""
        self.ops["select"] += 1
        if not 0 <= k < self.count(sym):
            raise IndexError(f"select({sym!r}, {k}): only {self.count(sym)} occurrences")
        x = self._root
        pos = 0
        while True:
            left = x.left
            lc = 0 if left is None else left.cnt.get(sym, 0)
            if k < lc:
                x = left
                continue
            k -= lc
            pos += 0 if left is None else left.tot
            if x.sym == sym:
                if k < x.len:
                    return pos + k
                k -= x.len
            pos += x.len
            x = x.right

    def access_rank(self, pos):
        """``(s[pos], rank(s[pos], pos))`` in a single descent."""
        self.ops["access"] += 1
        self.ops["rank"] += 1
        self._check(pos, len(self))
        x = self._root
        passed = []
        while True:
            left = x.left
            ls = 0 if left is None else left.tot
            if pos < ls:
                x = left
            elif pos < ls + x.len:
                break
            else:
                passed.append(x)
                pos -= ls + x.len
                x = x.right
        sym = x.sym
        acc = pos - ls
        if x.left is not None:
            acc += x.left.cnt.get(sym, 0)
        for y in passed:
            if y.left is not None:
                acc += y.left.cnt.get(sym, 0)
            if y.sym == sym:
                acc += y.len
        return sym, acc

    def run_at(self, pos):
        """``(start, length, symbol)`` of the stored run covering ``pos``."""
        self.ops["access"] += 1
        self._check(pos, len(self))
        x, _, start = self._find(pos)
        return start, x.len, x.sym

    # -- updates ---------------------------------------------------------

    def _bump(self, x, delta):
        x.len += delta
        sym = x.sym
        while x is not None:
            x.tot += delta
            x.cnt[sym] += delta
            x = x.parent

    def _rotate_up(self, x):
        p = x.parent
        g = p.parent
        if p.left is x:
            p.left = x.right
            if x.right is not None:
                x.right.parent = p
            x.right = p
        else:
            p.right = x.left
            if x.left is not None:
                x.left.parent = p
            x.left = p
        p.parent = x
        x.parent = g
        if g is None:
            self._root = x
        elif g.left is p:
            g.left = x
        else:
            g.right = x
        # x now spans exactly what p spanned
        x.tot, x.nrun, x.cnt = p.tot, p.nrun, p.cnt
        _pull(p)

    def _attach(self, node, parent, as_left):
        node.parent = parent
        if as_left:
            parent.left = node
        else:
            parent.right = node
        sym = node.sym
        length = node.len
        y = parent
        while y is not None:
            y.tot += length
            y.nrun += 1
            y.cnt[sym] = y.cnt.get(sym, 0) + length
            y = y.parent
        while node.parent is not None and node.parent.prio < node.prio:
            self._rotate_up(node)
        return node

    def _new(self, sym, length):
        return _Run(sym, length, self._rng.random())

    def _insert_after(self, ref, sym, length):
        node = self._new(sym, length)
        if ref.right is None:
            return self._attach(node, ref, False)
        y = ref.right
        while y.left is not None:
            y = y.left
        return self._attach(node, y, True)

    def _insert_before(self, ref, sym, length):
        node = self._new(sym, length)
        if ref.left is None:
            return self._attach(node, ref, True)
        y = ref.left
        while y.right is not None:
            y = y.right
        return self._attach(node, y, False)

    def _last(self):
        x = self._root
        while x.right is not None:
            x = x.right
        return x

    def _pred(self, x):
        if x.left is not None:
            x = x.left
            while x.right is not None:
                x = x.right
            return x
        while x.parent is not None and x.parent.left is x:
            x = x.parent
        return x.parent

    def append_run(self, sym, length):
        """Append ``length`` copies of ``sym`` at the end."""
        if length <= 0:
            raise ValueError("run length must be positive")
        self.ops["insert"] += 1
        if self._root is None:
            self._root = self._new(sym, length)
            return
        last = self._last()
        if last.sym == sym:
            self._bump(last, length)
        else:
            self._insert_after(last, sym, length)

    def insert(self, pos, sym):
        """Insert ``sym`` before position ``pos`` (``pos == len`` appends)."""
        n = len(self)
        if not 0 <= pos <= n:
            raise IndexError(f"insert position {pos} out of range [0, {n}]")
        if pos == n:
            self.append_run(sym, 1)
            return
        self.ops["insert"] += 1
        x, off, _ = self._find(pos)
        if x.sym == sym:
            self._bump(x, 1)
        elif off == 0:
            prev = self._pred(x)
            if prev is not None and prev.sym == sym:
                self._bump(prev, 1)
            else:
                self._insert_before(x, sym, 1)
        else:
            tail = x.len - off
            self._bump(x, -tail)
            mid = self._insert_after(x, sym, 1)
            self._insert_after(mid, x.sym, tail)

    def check(self):
        """Verify structural invariants; raises AssertionError on failure."""
        def walk(x, parent):
            if x is None:
                return 0, 0, {}
            assert x.parent is parent
            assert x.len >= 1
            if parent is not None:
                assert x.prio <= parent.prio
            lt, lr, lc = walk(x.left, x)
            rt, rr, rc = walk(x.right, x)
            cnt = dict(lc)
            for s, v in rc.items():
                cnt[s] = cnt.get(s, 0) + v
            cnt[x.sym] = cnt.get(x.sym, 0) + x.len
            assert x.tot == lt + rt + x.len
            assert x.nrun == lr + rr + 1
            assert {s: v for s, v in x.cnt.items() if v} == cnt
            return x.tot, x.nrun, cnt

        walk(self._root, None)
        prev = None
        for sym, _ in self.iter_runs():
            assert sym != prev, "adjacent runs share a symbol"
            prev = sym


class GapBitvector:
    """Dynamic bitvector stored as alternating runs of 0s and 1s.

    Space is O(ones) runs; queries and inserts are O(log ones).
    """

    def __init__(self, bits=()):
        self._s = RunLengthString()
        for b in bits:
            self.insert(len(self), b)

    def __len__(self):
        return len(self._s)

    def __iter__(self):
        return iter(self._s)

    @property
    def size(self):
        return len(self._s)

    @property
    def ones(self):
        return self._s.count(1)

    @property
    def runs(self):
        return self._s.runs

    @property
    def ops(self):
        return self._s.ops

    def insert(self, pos, bit):
        if bit not in (0, 1):
            raise ValueError(f"bit must be 0 or 1, got {bit!r}")
        self._s.insert(pos, bit)

    def access(self, pos):
        return self._s.access(pos)

    def rank1(self, pos):
        return self._s.rank(1, pos)

    def select1(self, k):
        return self._s.select(1, k)
