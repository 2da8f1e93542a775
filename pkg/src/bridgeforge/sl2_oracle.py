"""Parabolic 2x2 matrix representations used as a nontriviality oracle.

The generators map to a -> [[1, 1], [0, 1]] and b -> [[1, 0], [w, 1]]
with w an indeterminate.  Evaluating the relator symbolically gives four
integer polynomials in w (the entries of the relator image minus the
identity); their gcd is the defining polynomial of the parabolic
representation variety, and its numeric roots give concrete
representations.  Words whose images stay far from +-identity at every
root are certified nontrivial only up to numeric error; the module
reports margins, never proofs.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .presentation import relator
from .slope import Frac

Poly = tuple[int, ...]  # integer coefficients, low degree first


def _trim(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_add(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return _trim(
        (f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)
    )


def poly_mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim(out)


def poly_eval(f: Poly, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _primitive(fracs) -> Poly:
    """Integer polynomial: denominators cleared, content 1, positive lead."""
    from math import gcd, lcm

    fracs = [Fraction(c) for c in fracs]
    if not fracs:
        return ()
    denom = 1
    for c in fracs:
        denom = lcm(denom, c.denominator)
    ints = [int(c * denom) for c in fracs]
    content = 0
    for c in ints:
        content = gcd(content, abs(c))
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def _poly_gcd_pair(f: Poly, g: Poly) -> Poly:
    a = [Fraction(c) for c in f]
    b = [Fraction(c) for c in g]
    while b:
        # a mod b
        while len(a) >= len(b) and a:
            factor = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i in range(len(b)):
                a[shift + i] -= factor * b[i]
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return _primitive(a)


def poly_gcd(*polys: Poly) -> Poly:
    acc: Poly = ()
    for f in polys:
        f = _trim(f)
        acc = f if not acc else _poly_gcd_pair(acc, f)
    return _primitive(acc)


# 2x2 matrices over the polynomial ring, stored as 4-tuples row-major
PolyMatrix = tuple[Poly, Poly, Poly, Poly]

_ONE: Poly = (1,)
_W: Poly = (0, 1)
_PGEN = {
    1: (_ONE, _ONE, (), _ONE),           # a
    -1: (_ONE, (-1,), (), _ONE),         # a^-1
    2: (_ONE, (), _W, _ONE),             # b
    -2: (_ONE, (), (0, -1), _ONE),       # b^-1
}


def poly_mat_mul(x: PolyMatrix, y: PolyMatrix) -> PolyMatrix:
    return (
        poly_add(poly_mul(x[0], y[0]), poly_mul(x[1], y[2])),
        poly_add(poly_mul(x[0], y[1]), poly_mul(x[1], y[3])),
        poly_add(poly_mul(x[2], y[0]), poly_mul(x[3], y[2])),
        poly_add(poly_mul(x[2], y[1]), poly_mul(x[3], y[3])),
    )


def poly_evaluate_word(word) -> PolyMatrix:
    out: PolyMatrix = (_ONE, (), (), _ONE)
    for letter in word:
        out = poly_mat_mul(out, _PGEN[letter])
    return out


def poly_det(mat: PolyMatrix) -> Poly:
    return poly_add(
        poly_mul(mat[0], mat[3]), tuple(-c for c in poly_mul(mat[1], mat[2]))
    )


@dataclass(frozen=True)
class RileyData:
    fraction: Frac             # even-numerator representative actually used
    poly: Poly                 # gcd of the four entries of rho(u) - I
    entries: PolyMatrix        # the raw entry polynomials, for diagnostics


def even_slope_rep(f: Frac) -> Frac:
    """Even-numerator slope of the same knot up to mirror image.

    The relator recipe produces a group relator exactly when the
    numerator is even (all double-twist slopes are); for an odd
    numerator q the mirror slope (p - q)/p is used instead, which has an
    isomorphic group and conjugate parabolic representations.
    """
    if f.num % 2:
        return Frac(f.den - f.num, f.den)
    return f


def riley_polynomials(f: Frac) -> RileyData:
    """Defining polynomial of the parabolic representations of slope f."""
    f = even_slope_rep(f)
    u = relator(f).u
    img = poly_evaluate_word(u)
    entries = (
        poly_add(img[0], (-1,)),
        img[1],
        img[2],
        poly_add(img[3], (-1,)),
    )
    g = poly_gcd(*entries)
    if not g:
        raise AssertionError("relator image is identically the identity")
    return RileyData(f, g, entries)


# numeric 2x2 matrices as complex 4-tuples row-major

def mat_mul(x, y):
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


def mat_inv(x):
    # determinant 1 throughout
    return (x[3], -x[1], -x[2], x[0])


def dist_pm_identity(mat) -> float:
    """Entrywise max distance from +-I, normalized by max(1, max entry)."""
    scale = max(1.0, max(abs(e) for e in mat))
    plus = max(abs(mat[0] - 1), abs(mat[1]), abs(mat[2]), abs(mat[3] - 1))
    minus = max(abs(mat[0] + 1), abs(mat[1]), abs(mat[2]), abs(mat[3] + 1))
    return min(plus, minus) / scale


@dataclass(frozen=True)
class NumericRep:
    omega: complex
    mat_a: tuple
    mat_b: tuple
    residual: float


def evaluate(word, rep: NumericRep):
    """Image of a word under a representation (left-to-right product)."""
    omega = rep.omega
    gens = {
        1: rep.mat_a,
        -1: mat_inv(rep.mat_a),
        2: rep.mat_b,
        -2: mat_inv(rep.mat_b),
    }
    out = (1 + 0j, 0j, 0j, 1 + 0j)
    for letter in word:
        out = mat_mul(out, gens[letter])
    return out


def _all_roots(poly: Poly) -> list[complex]:
    """All roots of an integer polynomial, found at 60 digits.

    Double-precision companion-matrix estimates lose roots once the
    defining polynomial has clustered roots (large p); solving at high
    precision from the exact coefficients keeps every root before the
    final rounding to double.
    """
    with mpmath.workdps(60):
        roots = mpmath.polyroots(
            [mpmath.mpf(c) for c in reversed(poly)], maxsteps=200, extraprec=200
        )
        return [complex(z) for z in roots]


def numeric_reps(f: Frac, tol: float = 1e-9) -> list[NumericRep]:
    """All distinct parabolic representation roots for slope f.

    Roots are Newton-polished, deduplicated, ordered by (real, imag), and
    packaged with generator images and the relator residual; roots whose
    residual exceeds tol are dropped with a warning.
    """
    data = riley_polynomials(f)
    if len(data.poly) < 2:
        warnings.warn(f"slope {f} has a constant defining polynomial; no roots")
        return []
    roots: list[complex] = []
    for r in _all_roots(data.poly):
        if all(abs(r - s) > 1e-8 for s in roots):
            roots.append(r)
    roots.sort(key=lambda z: (z.real, z.imag))
    u = relator(data.fraction).u
    reps = []
    for omega in roots:
        rep = NumericRep(
            omega=omega,
            mat_a=(1 + 0j, 1 + 0j, 0j, 1 + 0j),
            mat_b=(1 + 0j, 0j, omega, 1 + 0j),
            residual=0.0,
        )
        img = evaluate(u, rep)
        residual = max(
            abs(img[0] - 1), abs(img[1]), abs(img[2]), abs(img[3] - 1)
        )
        rep = NumericRep(rep.omega, rep.mat_a, rep.mat_b, float(residual))
        if rep.residual > tol:
            warnings.warn(
                f"dropping root {omega} with relator residual {residual:.3e}"
            )
            continue
        reps.append(rep)
    if not reps:
        warnings.warn(f"no representation root of {f} met tolerance {tol}")
    return reps
