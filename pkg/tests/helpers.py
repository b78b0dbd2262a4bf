"""Independent brute-force oracles used across the test modules."""

TERM, EOT = 0, 1


def T(s):
    """Readable text literal: '#' and '$' become the terminator bytes."""
    return bytes({"#": TERM, "$": EOT}.get(ch, ord(ch)) for ch in s)


def rotation_matrix(t):
    """Sorted rotations of ``t`` with their starting offsets."""
    n = len(t)
    return sorted((t[i:] + t[:i], i) for i in range(n))


def matrix_bwt(t):
    return bytes(rot[-1] for rot, _ in rotation_matrix(t))


def matrix_lf(t):
    """LF as a list, computed from rotation offsets alone."""
    rows = rotation_matrix(t)
    n = len(t)
    row_of = {off: r for r, (_, off) in enumerate(rows)}
    return [row_of[(off - 1) % n] for _, off in rows]


def matrix_interval(t, w):
    """Row interval of rotations starting with ``w``."""
    rows = [rot for rot, _ in rotation_matrix(t)]
    hits = [r for r, rot in enumerate(rows) if rot.startswith(w)]
    if not hits:
        lo = sum(1 for rot in rows if rot < w)
        return lo, lo
    return hits[0], hits[-1] + 1


def greedy_phrases(t):
    """(length, symbol) of the greedy parse by direct substring search."""
    out = []
    i = 0
    n = len(t)
    while i < n:
        m = 0
        # an occurrence inside t[:i + m] necessarily starts before i
        while i + m + 1 < n and t.find(t[i:i + m + 1], 0, i + m) >= 0:
            m += 1
        out.append((m, t[i + m]))
        i += m + 1
    return out


def check_sources(t, parse):
    """Every phrase copies from a strictly earlier start and decodes to t."""
    i = 0
    for src, length, sym in parse:
        if length:
            assert src is not None and 0 <= src < i
            for m in range(length):
                assert t[src + m] == t[i + m]
        else:
            assert src is None
        assert t[i + length] == sym
        i += length + 1
    assert i == len(t)
