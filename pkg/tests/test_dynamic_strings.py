import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlbwt_lz77 import GapBitvector, RunLengthString

A, B = ord("a"), ord("b")


def rls(s):
    return RunLengthString(s.encode())


def content(x):
    return bytes(x).decode()


# -- examples ------------------------------------------------------------

def test_bv_insert_into_empty():
    bv = GapBitvector()
    bv.insert(0, 1)
    assert list(bv) == [1]
    assert bv.ones == 1


def test_bv_prepend_zero():
    bv = GapBitvector([1])
    bv.insert(0, 0)
    assert list(bv) == [0, 1]


def test_bv_rank_and_select():
    bv = GapBitvector([0, 1, 1, 0])
    assert bv.rank1(0) == 0
    assert bv.rank1(3) == 2
    assert bv.rank1(4) == 2
    assert bv.select1(0) == 1
    assert GapBitvector([1]).select1(0) == 0


def test_bv_errors():
    bv = GapBitvector([0, 1])
    with pytest.raises(IndexError):
        bv.insert(3, 1)
    with pytest.raises(IndexError):
        bv.rank1(3)
    with pytest.raises(IndexError):
        bv.select1(1)
    with pytest.raises(ValueError):
        bv.insert(0, 2)


def test_rls_absorbs_into_run():
    s = rls("aa")
    s.insert(1, A)
    assert content(s) == "aaa"
    assert s.runs == 1


def test_rls_splits_run():
    s = rls("aa")
    s.insert(1, B)
    assert content(s) == "aba"
    assert s.runs == 3


def test_rls_access_rank_select():
    s = rls("aab")
    assert s.access(2) == B
    assert rls("a").access(0) == A
    t = rls("aaabbb")
    assert t.rank(B, 4) == 1
    assert t.rank(A, 0) == 0
    assert t.select(B, 0) == 3
    assert rls("ab").select(A, 0) == 0


def test_rls_errors():
    s = rls("ab")
    with pytest.raises(IndexError):
        s.insert(3, A)
    with pytest.raises(IndexError):
        s.access(2)
    with pytest.raises(IndexError):
        s.rank(A, 3)
    with pytest.raises(IndexError):
        s.select(A, 1)
    with pytest.raises(IndexError):
        s.select(ord("z"), 0)


def test_append_at_end_everywhere():
    s = RunLengthString()
    for ch in b"abba":
        s.insert(len(s), ch)
    assert content(s) == "abba"
    assert s.runs == 3


def test_from_runs_merges_neighbours():
    s = RunLengthString.from_runs([(2, A), (3, A), (1, B)])
    assert content(s) == "aaaaab"
    assert s.runs == 2


def test_access_rank_and_run_at():
    s = rls("aabbba")
    assert s.access_rank(4) == (B, 2)
    assert s.access_rank(5) == (A, 2)
    assert s.run_at(3) == (2, 3, B)


# -- replay against a plain list ----------------------------------------

def replay(ops, alphabet, seed):
    rng = random.Random(seed)
    s = RunLengthString()
    naive = []
    for _ in range(ops):
        pos = rng.randint(0, len(naive))
        sym = rng.choice(alphabet)
        s.insert(pos, sym)
        naive.insert(pos, sym)
    return s, naive


def assert_matches(s, naive):
    assert list(s) == naive
    runs = 0
    prev = None
    for sym in naive:
        runs += sym != prev
        prev = sym
    assert s.runs == runs
    for sym in set(naive):
        seen = 0
        for pos, x in enumerate(naive):
            if x == sym:
                assert s.rank(sym, pos) == seen
                assert s.select(sym, seen) == pos
                seen += 1
        assert s.rank(sym, len(naive)) == seen
        assert s.count(sym) == seen
    for pos, x in enumerate(naive):
        assert s.access(pos) == x


@pytest.mark.parametrize("alphabet", [b"a", b"ab", b"acgt", bytes(range(256))])
def test_random_inserts_replay(alphabet):
    s, naive = replay(3000, alphabet, seed=len(alphabet))
    s.check()
    assert_matches(s, naive)


def test_ten_thousand_inserts_replay():
    s, naive = replay(10_000, b"ab", seed=7)
    s.check()
    assert list(s) == naive
    probe = random.Random(8)
    for _ in range(2000):
        pos = probe.randint(0, len(naive) - 1)
        assert s.access(pos) == naive[pos]
        assert s.rank(A, pos) == naive[:pos].count(A)


def test_bitvector_replay():
    rng = random.Random(3)
    bv = GapBitvector()
    naive = []
    for _ in range(1000):
        pos = rng.randint(0, len(naive))
        bit = 1 if rng.random() < 0.3 else 0
        bv.insert(pos, bit)
        naive.insert(pos, bit)
    assert list(bv) == naive
    assert bv.ones == sum(naive)
    ones = [i for i, b in enumerate(naive) if b]
    for k, pos in enumerate(ones):
        assert bv.select1(k) == pos
    for pos in range(len(naive) + 1):
        assert bv.rank1(pos) == sum(naive[:pos])
    # space stays proportional to the number of ones
    assert bv.runs <= 2 * bv.ones + 1


def test_stored_runs_equal_maximal_runs():
    text = b"aaabbbbcaaaaaaaa" * 4
    s = RunLengthString(text)
    # four runs per block, the trailing a-run merges across each of 3 joins
    assert s.runs == s.node_count == 4 * 4 - 3


# -- properties ----------------------------------------------------------

inserts = st.lists(
    st.tuples(st.floats(0, 1, exclude_max=True), st.sampled_from(b"abc")),
    max_size=200,
)


@settings(max_examples=150, deadline=None)
@given(inserts)
def test_run_maximality_and_duality(ops):
    s = RunLengthString()
    naive = []
    for frac, sym in ops:
        pos = int(frac * (len(naive) + 1))
        s.insert(pos, sym)
        naive.insert(pos, sym)
        prev = None
        for run_sym, length in s.iter_runs():
            assert run_sym != prev and length >= 1
            prev = run_sym
    assert list(s) == naive
    assert sum(s.totals().values()) == len(s)
    for sym in set(naive):
        for k in range(s.count(sym)):
            assert s.rank(sym, s.select(sym, k)) == k
    for pos, sym in enumerate(naive):
        assert s.select(sym, s.rank(sym, pos)) == pos


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.floats(0, 1, exclude_max=True), st.booleans()), max_size=150))
def test_bitvector_invariants(ops):
    bv = GapBitvector()
    for frac, bit in ops:
        bv.insert(int(frac * (len(bv) + 1)), int(bit))
    assert bv.size >= bv.ones >= 0
    assert bv.rank1(bv.size) == bv.ones
    for k in range(bv.ones):
        pos = bv.select1(k)
        assert bv.rank1(pos) == k
        assert bv.access(pos) == 1
    ranks = [bv.rank1(i) for i in range(bv.size + 1)]
    assert ranks == sorted(ranks)
