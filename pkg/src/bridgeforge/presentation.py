"""Two-generator relator of a two-bridge knot group and its S-sequence data.

For a slope q/p (p odd) the group has presentation <a, b | u> where

    u = a * uhat * b * uhat^-1,
    uhat = b^e1 a^e2 b^e3 ... a^e(p-1),   ei = (-1)^floor(i*q/p).

The relator is cyclically alternating of length 2p.  For double-twist
slopes the cyclic S-sequence of u splits as ((S1, S2, S1, S2)) with the
closed forms checked by verify_cs_closed_form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .slope import Frac, GenusOneKnot
from .words import (
    Word,
    concat,
    cyclic_s_sequence,
    cyclic_seq_eq,
    free_reduce,
    inverse,
    is_cyclically_alternating,
    is_cyclically_reduced,
)


def epsilon_sequence(p: int, q: int) -> tuple[int, ...]:
    """Signs (-1)^floor(i*q/p) for i = 1..p-1."""
    if p < 2 or not 0 < q < p or gcd(p, q) != 1:
        raise ValueError("need coprime 0 < q < p")
    return tuple(-1 if (i * q // p) % 2 else 1 for i in range(1, p))


@dataclass(frozen=True)
class Relator:
    fraction: Frac
    epsilons: tuple[int, ...]
    u_hat: Word
    u: Word


def relator(f: Frac) -> Relator:
    """Build and validate the relator for a knot slope (odd denominator)."""
    q, p = f.num, f.den
    if p % 2 == 0:
        raise ValueError("even denominator is a two-bridge link, not a knot")
    eps = epsilon_sequence(p, q)
    # uhat alternates b, a, b, a, ... with the epsilon signs
    u_hat = tuple((2 if i % 2 else 1) * eps[i - 1] for i in range(1, p))
    u = concat((1,), u_hat, (2,), inverse(u_hat))
    if len(u) != 2 * p or free_reduce(u) != u:
        raise AssertionError("relator failed length/reducedness validation")
    if not (is_cyclically_reduced(u) and is_cyclically_alternating(u)):
        raise AssertionError("relator is not cyclically alternating")
    return Relator(f, eps, u_hat, u)


class CanonicalDecomposition(NamedTuple):
    S1: tuple[int, ...]
    S2: tuple[int, ...]


def canonical_decomposition(knot: GenusOneKnot) -> CanonicalDecomposition:
    """The closed-form S1, S2 with CS(u) = ((S1, S2, S1, S2))."""
    m, n = knot.m, knot.n
    if knot.sign > 0:
        return CanonicalDecomposition((2 * m + 1,), (2 * m,) * (2 * n - 1))
    return CanonicalDecomposition((2 * m,) * (2 * n - 1), (2 * m - 1,))


def verify_cs_closed_form(knot: GenusOneKnot) -> bool:
    """Computed cyclic S-sequence of the relator vs ((S1, S2, S1, S2))."""
    u = relator(knot.fraction).u
    s1, s2 = canonical_decomposition(knot)
    return cyclic_seq_eq(cyclic_s_sequence(u), s1 + s2 + s1 + s2)
