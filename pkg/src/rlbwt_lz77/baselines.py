"""Plain-array reference implementations.

These work on fully decompressed text and serve as ground truth for the
compressed-space converters.  Symbols are byte values; ``#`` is 0x00 and
``$`` is 0x01.
"""

import random

import numpy as np

from .errors import AlphabetError, MalformedParseError, MalformedRunsError

TERM = 0
EOT = 1

# rotation sort by key slices up to this length, prefix doubling beyond
_DIRECT_SORT_MAX = 2048
_BRUTE_LZ_MAX = 1024


def wrap_text(raw):
    """Return ``#raw$``; ``raw`` must avoid the two terminator bytes."""
    raw = bytes(raw)
    for off, b in enumerate(raw):
        if b <= EOT:
            raise AlphabetError(off, b)
    return bytes([TERM]) + raw + bytes([EOT])


def check_text(t):
    t = bytes(t)
    if len(t) < 2 or t[0] != TERM or t[-1] != EOT:
        raise ValueError("text must have the form #T'$")
    wrap_text(t[1:-1])
    return t


def rotation_order(t):
    """Indices of the cyclic rotations of ``t`` in sorted order."""
    t = bytes(t)
    n = len(t)
    if n <= _DIRECT_SORT_MAX:
        doubled = t + t
        return sorted(range(n), key=lambda i: doubled[i:i + n])
    return _rotation_order_doubling(t)


def _rotation_order_doubling(t):
    n = len(t)
    rank = np.frombuffer(t, dtype=np.uint8).astype(np.int64)
    idx = np.arange(n)
    k = 1
    while True:
        second = rank[(idx + k) % n]
        order = np.lexsort((second, rank))
        r1 = rank[order]
        r2 = second[order]
        boundary = np.empty(n, dtype=bool)
        boundary[0] = True
        boundary[1:] = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        new = np.empty(n, dtype=np.int64)
        new[order] = np.cumsum(boundary) - 1
        rank = new
        if rank.max() == n - 1 or k >= n:
            return order.tolist()
        k *= 2


def naive_bwt(t):
    """Last column of the sorted rotation matrix of ``t``."""
    t = bytes(t)
    n = len(t)
    return bytes(t[(i - 1) % n] for i in rotation_order(t))


def run_length(s):
    """Maximal ``(length, symbol)`` runs of a byte sequence."""
    runs = []
    for sym in bytes(s):
        if runs and runs[-1][1] == sym:
            runs[-1][0] += 1
        else:
            runs.append([1, sym])
    return [(length, sym) for length, sym in runs]


def naive_rlbwt(t):
    return run_length(naive_bwt(t))


def _brute_lz77(t):
    n = len(t)
    out = []
    i = 0
    while i < n:
        best_len, best_src = 0, None
        for p in range(i):
            m = 0
            # overlapping copy: the source may run into the phrase itself
            while i + m < n - 1 and t[p + m] == t[i + m]:
                m += 1
            if m > best_len:
                best_len, best_src = m, p
        out.append((best_src, best_len, t[i + best_len]))
        i += best_len + 1
    return out


def _lcp_array(t, sa):
    n = len(t)
    rank = [0] * n
    for r, p in enumerate(sa):
        rank[p] = r
    lcp = [0] * n  # lcp[r] = lcp(sa[r-1], sa[r])
    h = 0
    for p in range(n):
        r = rank[p]
        if r == 0:
            h = 0
            continue
        q = sa[r - 1]
        while p + h < n and q + h < n and t[p + h] == t[q + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return rank, lcp


def _sa_lz77(t):
    # '#' unique at the front and '$' unique at the back make rotation order
    # identical to suffix order
    n = len(t)
    sa = rotation_order(t)
    rank, lcp = _lcp_array(t, sa)
    out = []
    i = 0
    while i < n:
        r = rank[i]
        best = 0
        m = n
        for q in range(r - 1, -1, -1):
            m = min(m, lcp[q + 1])
            if m <= best:
                break
            if sa[q] < i:
                best = m
                break
        m = n
        for q in range(r + 1, n):
            m = min(m, lcp[q])
            if m <= best:
                break
            if sa[q] < i:
                best = m
                break
        best = min(best, n - 1 - i)
        src = None
        if best:
            # leftmost source among all suffixes sharing >= best symbols
            src = i
            lo = r
            while lo > 0 and lcp[lo] >= best:
                lo -= 1
            hi = r
            while hi + 1 < n and lcp[hi + 1] >= best:
                hi += 1
            src = min(sa[q] for q in range(lo, hi + 1))
        out.append((src, best, t[i + best]))
        i += best + 1
    return out


def naive_lz77(t):
    """Greedy LZ77 parse with leftmost sources; overlapping copies allowed."""
    t = bytes(t)
    if len(t) <= _BRUTE_LZ_MAX:
        return _brute_lz77(t)
    return _sa_lz77(t)


def lz77_decode(parse):
    """Replay ``(source, length, symbol)`` triples into a byte string."""
    out = bytearray()
    for k, (src, length, sym) in enumerate(parse):
        if (src is None) != (length == 0):
            raise MalformedParseError(f"phrase {k}: length 0 iff source is NULL")
        if src is not None:
            if not 0 <= src < len(out):
                raise MalformedParseError(
                    f"phrase {k}: source {src} not before position {len(out)}"
                )
            for m in range(length):
                out.append(out[src + m])
        out.append(sym)
    return bytes(out)


def rlbwt_decode(runs):
    """Invert a run-length BWT with a plain LF array."""
    L = bytearray()
    for length, sym in runs:
        if length < 1:
            raise MalformedRunsError("run lengths must be positive")
        L.extend([sym] * length)
    n = len(L)
    if L.count(TERM) != 1:
        raise MalformedRunsError("BWT must contain exactly one '#'")
    counts = [0] * 256
    for sym in L:
        counts[sym] += 1
    C = [0] * 256
    acc = 0
    for s in range(256):
        C[s] = acc
        acc += counts[s]
    seen = [0] * 256
    lf = [0] * n
    for i, sym in enumerate(L):
        lf[i] = C[sym] + seen[sym]
        seen[sym] += 1
    out = bytearray(n)
    row = 0
    for k in range(n - 1, -1, -1):
        out[k] = L[row]
        row = lf[row]
        if row == 0 and k:
            raise MalformedRunsError("BWT does not describe a single text")
    # row 0 is the rotation starting with '#', so the walk yields T backwards
    # starting from T[n-1]
    return bytes(out)


def gen_corpus(kind, size, seed, pattern=b"ab", alphabet=None, block=None, mutation_rate=0.002):
    """Deterministic raw text (no terminators) of ``size`` bytes."""
    rng = random.Random(f"{kind}:{size}:{seed}")
    if size < 0:
        raise ValueError("size must be non-negative")
    if kind == "random":
        alpha = bytes(alphabet) if alphabet is not None else bytes(range(2, 256))
        return bytes(rng.choice(alpha) for _ in range(size))
    if kind == "periodic":
        pattern = bytes(pattern)
        if not pattern:
            raise ValueError("empty pattern")
        reps = size // len(pattern) + 1
        return (pattern * reps)[:size]
    if kind == "fibonacci":
        a, b = b"a", b"ab"
        while len(b) < size:
            a, b = b, b + a
        return b[:size] if size > 1 else b"a"[:size]
    if kind == "mutated-repeats":
        alpha = bytes(alphabet) if alphabet is not None else b"acgt"
        blen = block if block is not None else rng.randint(16, 512)
        base = bytes(rng.choice(alpha) for _ in range(max(1, blen)))
        out = bytearray((base * (size // len(base) + 1))[:size])
        for pos in range(size):
            if rng.random() < mutation_rate:
                out[pos] = rng.choice(alpha)
        return bytes(out)
    raise ValueError(f"unknown corpus kind {kind!r}")
