# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled piece kernels; same contracts as ``_pure``.

The max-piece table here runs over all pairs of rotation offsets and
takes the longest common prefix, which keeps the C loop flat; the pure
twin uses group refinement instead, so the parity tests exercise two
independent algorithms.
"""

from libc.stdlib cimport free, malloc

IMPL = "compiled"


def max_piece_table(letters):
    cdef Py_ssize_t n = len(letters)
    cdef Py_ssize_t i, j, s, lcp
    cdef int *buf
    cdef int *best
    cdef int *fwd
    cdef int *bwd
    cdef int *wi
    cdef int *wj
    if n == 0:
        return [], []
    buf = <int *> malloc(4 * n * sizeof(int))
    best = <int *> malloc(2 * n * sizeof(int))
    if buf == NULL or best == NULL:
        free(buf)
        free(best)
        raise MemoryError()
    fwd = buf
    bwd = buf + 2 * n
    try:
        for s in range(n):
            fwd[s] = letters[s]
            fwd[s + n] = fwd[s]
            bwd[s] = -letters[n - 1 - s]
            bwd[s + n] = bwd[s]
        for i in range(2 * n):
            best[i] = 0
        # starts are indexed 0..2n-1: direction i // n, offset i % n
        for i in range(2 * n):
            wi = buf + (i // n) * 2 * n + (i % n)
            for j in range(2 * n):
                if i == j:
                    continue
                wj = buf + (j // n) * 2 * n + (j % n)
                lcp = 0
                while lcp < n and wi[lcp] == wj[lcp]:
                    lcp += 1
                if lcp > best[i]:
                    best[i] = lcp
        return (
            [best[s] for s in range(n)],
            [best[n + s] for s in range(n)],
        )
    finally:
        free(buf)
        free(best)


def min_pieces_span(piece_len, start, length):
    cdef Py_ssize_t n = len(piece_len)
    cdef Py_ssize_t length_c = length
    cdef Py_ssize_t start_c = start
    cdef Py_ssize_t s, pos, lo, hi, best, reach, k
    cdef int *p
    if length_c == 0:
        return 0
    if length_c < 0 or length_c > n:
        raise ValueError("span length must be between 1 and len(piece_len)")
    p = <int *> malloc(n * sizeof(int))
    if p == NULL:
        raise MemoryError()
    try:
        for s in range(n):
            p[s] = piece_len[s]
        k = 0
        lo = 0
        hi = 0
        while hi < length_c:
            k += 1
            best = hi
            for pos in range(lo, hi + 1):
                reach = pos + p[(start_c + pos) % n]
                if reach > best:
                    best = reach
            if best == hi:
                return -1
            lo = hi + 1
            hi = length_c if best >= length_c else best
        return k
    finally:
        free(p)


def reach_table(piece_len, kmax):
    cdef Py_ssize_t n = len(piece_len)
    cdef Py_ssize_t kmax_c = kmax
    cdef Py_ssize_t k, s, pos, best, reach
    cdef int *p
    cdef int *prev
    tables = [[0] * n]
    if kmax_c < 1 or n == 0:
        return tables
    p = <int *> malloc(2 * n * sizeof(int))
    if p == NULL:
        raise MemoryError()
    prev = p + n
    try:
        for s in range(n):
            p[s] = piece_len[s]
            prev[s] = p[s] if p[s] < n else n
        tables.append([prev[s] for s in range(n)])
        for k in range(2, kmax_c + 1):
            nxt = [0] * n
            for s in range(n):
                best = prev[s]
                for pos in range(1, prev[s] + 1):
                    reach = pos + p[(s + pos) % n]
                    if reach > best:
                        best = reach
                nxt[s] = n if best > n else best
            tables.append(nxt)
            for s in range(n):
                prev[s] = nxt[s]
        return tables
    finally:
        free(p)
