"""Pure Python piece kernels.

The symmetrized set of a cyclic word u of length n consists of the n
rotations of u and the n rotations of u^-1 (the caller guarantees all 2n
are distinct words).  A piece is a common prefix of two distinct
elements of that set, so the longest piece starting at a given rotation
offset is the longest prefix that offset shares with any other offset.

max_piece_table computes those maxima by iterative group refinement:
offsets sharing a length-d prefix sit in one group, and a group member
survives to depth d+1 while its group still has a partner.  Total work
is the sum of all table entries.
"""

IMPL = "pure"


def max_piece_table(letters):
    """Longest-piece lengths per rotation offset, for u and for u^-1.

    Returns (fwd, bwd): fwd[s] is the largest L such that the length-L
    cyclic subword of u starting at offset s is a piece; bwd[s] the same
    for u^-1.  Entries are 0 where even the single letter is unique.
    """
    n = len(letters)
    if n == 0:
        return [], []
    rows = (
        list(letters) * 2,
        [-x for x in reversed(letters)] * 2,
    )
    out = ([0] * n, [0] * n)
    groups = {}
    for d in (0, 1):
        row = rows[d]
        for s in range(n):
            groups.setdefault(row[s], []).append((d, s))
    live = [g for g in groups.values() if len(g) > 1]
    depth = 1
    while live:
        for g in live:
            for d, s in g:
                out[d][s] = depth
        if depth == n:
            break
        nxt = []
        for g in live:
            sub = {}
            for d, s in g:
                sub.setdefault(rows[d][s + depth], []).append((d, s))
            nxt.extend(gg for gg in sub.values() if len(gg) > 1)
        live = nxt
        depth += 1
    return out


def min_pieces_span(piece_len, start, length):
    """Minimal number of pieces covering the cyclic span [start, start+length).

    piece_len is a max_piece_table row.  Works as a shortest path on the
    cut positions: pieces are prefix-closed, so the positions reachable
    with k pieces form an interval and one frontier sweep per k suffices.
    Returns -1 when the span is not a product of pieces at all.
    """
    n = len(piece_len)
    if length == 0:
        return 0
    if not 0 < length <= n:
        raise ValueError("span length must be between 1 and len(piece_len)")
    k = 0
    lo = hi = 0
    while hi < length:
        k += 1
        best = hi
        for pos in range(lo, hi + 1):
            reach = pos + piece_len[(start + pos) % n]
            if reach > best:
                best = reach
        if best == hi:
            return -1
        lo = hi + 1
        hi = length if best >= length else best
    return k


def reach_table(piece_len, kmax):
    """reach[k][s]: longest span from offset s coverable by <= k pieces.

    reach[0] is all zeros; entries are capped at n.
    """
    n = len(piece_len)
    tables = [[0] * n]
    if kmax >= 1:
        tables.append([x if x < n else n for x in piece_len])
    for _ in range(2, kmax + 1):
        prev = tables[-1]
        nxt = [0] * n
        for s in range(n):
            best = prev[s]
            for pos in range(1, prev[s] + 1):
                reach = pos + piece_len[(s + pos) % n]
                if reach > best:
                    best = reach
            nxt[s] = n if best > n else best
        tables.append(nxt)
    return tables
