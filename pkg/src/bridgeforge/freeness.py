"""Word-level core of the no-relation argument for the long meridian pair.

A hypothetical relation x_l^k1 y_l^l1 ... x_l^kt y_l^lt = 1 is
represented by an explicit cyclically reduced word; its sign pattern
determines a cyclically alternating word whose cyclic S-sequence has an
exact closed form.  The forbidden-term facts extracted from that closed
form are what the small-cancellation contradiction consumes, and the
numeric no-relation scan adds evidence from parabolic matrix images.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import sl2_oracle
from .meridians import long_meridian_words
from .slope import GenusOneKnot
from .words import (
    Word,
    concat,
    cyclic_s_sequence,
    cyclic_seq_eq,
    free_reduce,
    inverse,
    is_cyclically_alternating,
    is_cyclically_reduced,
    letter_power,
)


class UnsupportedCaseError(ValueError):
    """No closed form exists for this input; use the bound check instead."""


def relation_word(knot: GenusOneKnot, exponent_pairs) -> Word:
    """The cyclically reduced word x_l^k1 y_l^l1 ... for nonzero exponents.

    Assembled as w_x a^k1 w_x^-1 w_y b^-l1 w_y^-1 ...; by construction no
    free reduction may occur, and a violation raises.
    """
    pairs = [(int(k), int(l)) for k, l in exponent_pairs]
    if not pairs or any(k == 0 or l == 0 for k, l in pairs):
        raise ValueError("exponents must be nonzero and the pattern nonempty")
    mw = long_meridian_words(knot)
    parts = []
    for k, l in pairs:
        parts += [mw.w_x, letter_power(1, k), inverse(mw.w_x)]
        parts += [mw.w_y, letter_power(-2, l), inverse(mw.w_y)]
    w = concat(*parts)
    if free_reduce(w) != w or not is_cyclically_reduced(w):
        raise AssertionError("relation word unexpectedly reduced")
    return w


def alternating_relation_word(knot: GenusOneKnot, sign_pairs) -> Word:
    """The cyclically alternating word x_l^e1x y_l^e1y ... for signs +-1."""
    signs = [(int(ex), int(ey)) for ex, ey in sign_pairs]
    if not signs or any(abs(ex) != 1 or abs(ey) != 1 for ex, ey in signs):
        raise ValueError("sign pattern entries must be +-1")
    mw = long_meridian_words(knot)
    parts = []
    for ex, ey in signs:
        parts.append(mw.x_l if ex == 1 else inverse(mw.x_l))
        parts.append(mw.y_l if ey == 1 else inverse(mw.y_l))
    w = concat(*parts)
    if not (is_cyclically_reduced(w) and is_cyclically_alternating(w)):
        raise AssertionError("sign-pattern word failed to be alternating")
    return w


def alternating_cs_closed_form(knot: GenusOneKnot, sign_pairs) -> tuple[int, ...]:
    """Exact closed form of the cyclic S-sequence of the sign-pattern word.

    Per factor (in order x_1, y_1, x_2, y_2, ...) the contribution is a
    run of 2m-blocks followed by an oriented pair: (m, m+1) for positive
    slope sign, (m, m-1) for negative sign with m >= 2, where the pair is
    reversed when the factor exponent differs from (-1)^n.  The m = 1
    negative family contributes asymmetric blocks of 2's around a 3 and
    has no closed form at all for (m, n) = (1, 1).
    """
    m, n = knot.m, knot.n
    eps = 1 if n % 2 == 0 else -1
    flat = [e for pair in sign_pairs for e in pair]
    if not flat:
        raise ValueError("empty sign pattern")
    out: list[int] = []
    if knot.sign > 0 or m >= 2:
        run = [2 * m] * (2 * n - 1)
        pair_eps = [m, m + 1] if knot.sign > 0 else [m, m - 1]
        for e in flat:
            out += run + (pair_eps if e == eps else pair_eps[::-1])
    elif n >= 2:
        for e in flat:
            left = n - 1 if e == eps else n - 2
            right = n - 2 if e == eps else n - 1
            out += [2] * (1 + left) + [3] + [2] * right
    else:
        raise UnsupportedCaseError(
            "no closed form for the (1, 1, -) slope; terms lie in {2, 3, 4}"
        )
    return tuple(out)


def _forbidden_terms_ok(knot: GenusOneKnot, cs) -> bool:
    m, n = knot.m, knot.n
    if knot.sign > 0:
        return all(t < 2 * m + 1 for t in cs)
    if m >= 2:
        return all(t != 2 * m - 1 for t in cs)
    if n >= 2:
        return all(t != 1 for t in cs)
    return all(t in (2, 3, 4) for t in cs)


def verify_alternating_cs(knot: GenusOneKnot, sign_pairs) -> bool:
    """Computed cyclic S-sequence vs closed form, plus forbidden terms.

    For the (1, 1, -) slope only the membership bound {2, 3, 4} applies.
    """
    cs = cyclic_s_sequence(alternating_relation_word(knot, sign_pairs))
    try:
        closed = alternating_cs_closed_form(knot, sign_pairs)
    except UnsupportedCaseError:
        closed = None
    if closed is not None and not cyclic_seq_eq(cs, closed):
        return False
    return _forbidden_terms_ok(knot, cs)


@dataclass
class ScanHit:
    word: str
    omega: complex
    distance: float


@dataclass
class ScanReport:
    knot: GenusOneKnot
    max_syllables: int
    tol: float
    roots: list[complex]
    max_residual: float
    words_checked: int
    min_distance: float
    hits: list[ScanHit] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.hits


_SYLLABLES = ("x", "X", "y", "Y")


def no_relation_scan(
    knot: GenusOneKnot,
    max_syllables: int = 6,
    tol: float = 1e-3,
    rep_tol: float = 1e-9,
) -> ScanReport:
    """Numeric evidence scan over words in the long meridian pair.

    Enumerates every freely reduced nonempty word in x_l^-+1, y_l^-+1
    with at most max_syllables syllables and evaluates it at every
    parabolic representation root of the knot's slope; any image within
    tol of +-identity is reported as a hit.  An empty report is evidence,
    not proof, of freeness.
    """
    mw = long_meridian_words(knot)
    reps = sl2_oracle.numeric_reps(knot.fraction, tol=rep_tol)
    if not reps:
        raise RuntimeError("no parabolic representation root below tolerance")
    report = ScanReport(
        knot=knot,
        max_syllables=max_syllables,
        tol=tol,
        roots=[rep.omega for rep in reps],
        max_residual=max(rep.residual for rep in reps),
        words_checked=0,
        min_distance=float("inf"),
    )
    for rep in reps:
        x = sl2_oracle.evaluate(mw.x_l, rep)
        y = sl2_oracle.evaluate(mw.y_l, rep)
        gens = (x, sl2_oracle.mat_inv(x), y, sl2_oracle.mat_inv(y))
        stack = [(i, gens[i], _SYLLABLES[i]) for i in range(4)]
        count = 0
        while stack:
            idx, mat, label = stack.pop()
            count += 1
            dist = sl2_oracle.dist_pm_identity(mat)
            if dist < report.min_distance:
                report.min_distance = dist
            if dist <= tol:
                report.hits.append(ScanHit(label, rep.omega, dist))
            if len(label) < max_syllables:
                for j in range(4):
                    if j == idx ^ 1:
                        continue  # x after X (and friends) is not reduced
                    stack.append(
                        (j, sl2_oracle.mat_mul(mat, gens[j]), label + _SYLLABLES[j])
                    )
        report.words_checked = count
    return report
