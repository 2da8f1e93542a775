"""The compiled and pure kernels must agree everywhere.

The two implementations use different algorithms (pairwise longest
common prefixes vs group refinement), so agreement on random inputs is a
meaningful cross-check in addition to the brute-force oracle.
"""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bridgeforge._kernel import _pure

try:
    from bridgeforge._kernel import _speed
except ImportError:
    _speed = None

from bridgeforge.presentation import relator
from bridgeforge.slope import GenusOneKnot
from bridgeforge.words import inverse, rotations

needs_speed = pytest.mark.skipif(_speed is None, reason="compiled kernel not built")


def random_relator_like_words(count, rng):
    """Cyclically reduced words whose rotations are all distinct."""
    out = []
    while len(out) < count:
        n = rng.randint(2, 40)
        w = [rng.choice([1, -1, 2, -2])]
        while len(w) < n:
            nxt = rng.choice([1, -1, 2, -2])
            if nxt != -w[-1]:
                w.append(nxt)
        w = tuple(w)
        if len(w) >= 2 and w[0] == -w[-1]:
            continue
        elems = rotations(w) + rotations(inverse(w))
        if len(set(elems)) == 2 * len(w):
            out.append(w)
    return out


def brute_max_piece(word):
    n = len(word)
    rows = (list(word) * 2, list(inverse(word)) * 2)
    starts = [(d, s) for d in (0, 1) for s in range(n)]
    out = ([0] * n, [0] * n)
    for d, s in starts:
        best = 0
        for d2, s2 in starts:
            if (d, s) == (d2, s2):
                continue
            lcp = 0
            while lcp < n and rows[d][s + lcp] == rows[d2][s2 + lcp]:
                lcp += 1
            best = max(best, lcp)
        out[d][s] = best
    return out


def brute_min_span(piece_len, start, length):
    n = len(piece_len)
    INF = 10**9
    best = [INF] * (length + 1)
    best[0] = 0
    for pos in range(length):
        if best[pos] == INF:
            continue
        for step in range(1, min(piece_len[(start + pos) % n], length - pos) + 1):
            if best[pos] + 1 < best[pos + step]:
                best[pos + step] = best[pos] + 1
    return -1 if best[length] == INF else best[length]


def test_pure_against_brute_force():
    rng = random.Random(5)
    for w in random_relator_like_words(12, rng):
        expected = brute_max_piece(w)
        got = _pure.max_piece_table(list(w))
        assert (list(expected[0]), list(expected[1])) == (got[0], got[1])
        P = got[0]
        for _ in range(30):
            s = rng.randrange(len(w))
            L = rng.randint(1, len(w))
            assert _pure.min_pieces_span(P, s, L) == brute_min_span(P, s, L)


def test_pure_reach_consistent_with_spans():
    rng = random.Random(6)
    for w in random_relator_like_words(8, rng):
        P = _pure.max_piece_table(list(w))[0]
        reach = _pure.reach_table(P, 4)
        n = len(w)
        for s in range(n):
            for k in range(1, 5):
                r = reach[k][s]
                if r:
                    assert 0 < _pure.min_pieces_span(P, s, min(r, n)) <= k
                if r < n:
                    beyond = _pure.min_pieces_span(P, s, r + 1)
                    assert beyond == -1 or beyond > k


@needs_speed
def test_speed_matches_pure_random():
    rng = random.Random(7)
    for w in random_relator_like_words(25, rng):
        pure = _pure.max_piece_table(list(w))
        fast = _speed.max_piece_table(list(w))
        assert tuple(pure) == tuple(fast)
        P = pure[0]
        assert _pure.reach_table(P, 3) == _speed.reach_table(P, 3)
        for _ in range(40):
            s = rng.randrange(len(w))
            L = rng.randint(0, len(w))
            assert _pure.min_pieces_span(P, s, L) == _speed.min_pieces_span(P, s, L)


@needs_speed
def test_speed_matches_pure_on_relators():
    for m, n, sign in ((1, 1, 1), (2, 3, -1), (4, 4, 1), (3, 2, -1)):
        u = list(relator(GenusOneKnot(m, n, sign).fraction).u)
        pure = _pure.max_piece_table(u)
        fast = _speed.max_piece_table(u)
        assert tuple(pure) == tuple(fast)


def test_span_edge_cases():
    P = [2, 1, 0, 2]
    assert _pure.min_pieces_span(P, 0, 0) == 0
    assert _pure.min_pieces_span(P, 2, 1) == -1  # dead position
    with pytest.raises(ValueError):
        _pure.min_pieces_span(P, 0, 5)


@given(
    st.lists(st.integers(min_value=0, max_value=8), min_size=1, max_size=20),
    st.data(),
)
def test_span_greedy_matches_dp_on_arbitrary_tables(P, data):
    # the frontier greedy must solve the jump-cover problem for any
    # nonnegative jump table, not just realizable piece tables
    start = data.draw(st.integers(min_value=0, max_value=len(P) - 1))
    length = data.draw(st.integers(min_value=0, max_value=len(P)))
    assert _pure.min_pieces_span(P, start, length) == brute_min_span(P, start, length)
    if _speed is not None:
        assert _speed.min_pieces_span(P, start, length) == brute_min_span(
            P, start, length
        )
