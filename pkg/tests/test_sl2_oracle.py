import random

from bridgeforge.meridians import long_meridian_words
from bridgeforge.presentation import relator
from bridgeforge.sl2_oracle import (
    dist_pm_identity,
    evaluate,
    even_slope_rep,
    mat_inv,
    mat_mul,
    numeric_reps,
    poly_det,
    poly_eval,
    poly_evaluate_word,
    poly_gcd,
    riley_polynomials,
)
from bridgeforge.slope import Frac, GenusOneKnot
from bridgeforge.words import inverse, parse_word


def test_poly_gcd_basics():
    # (x - 1)(x + 2) and (x - 1)(x - 3) share x - 1
    assert poly_gcd((-2, 1, 1), (3, -4, 1)) == (-1, 1)
    assert poly_gcd((2, 2), (4,)) == (1,)
    assert poly_gcd((), (0, 2)) == (0, 1)


def test_generator_determinants():
    for word in ("a", "b", "A", "B", "abAB"):
        det = poly_det(poly_evaluate_word(parse_word(word)))
        assert det == (1,)


def test_even_slope_rep():
    assert even_slope_rep(Frac(3, 5)) == Frac(2, 5)
    assert even_slope_rep(Frac(2, 5)) == Frac(2, 5)


def test_riley_data_small_slopes():
    fig8 = riley_polynomials(Frac(2, 5))
    assert len(fig8.poly) - 1 == 2
    trefoil = riley_polynomials(Frac(2, 3))
    assert len(trefoil.poly) - 1 == 1


def test_numeric_reps_residuals_and_count():
    for q, p in ((2, 5), (2, 3), (2, 7), (4, 7), (2, 15)):
        reps = numeric_reps(Frac(q, p))
        assert len(reps) == (p - 1) // 2
        assert all(rep.residual < 1e-9 for rep in reps)
    # figure-eight has non-real parabolic representations
    assert any(abs(rep.omega.imag) > 0.1 for rep in numeric_reps(Frac(2, 5)))
    # trefoil root is real with tiny residual
    trefoil = numeric_reps(Frac(2, 3))
    assert len(trefoil) == 1 and trefoil[0].residual < 1e-12


def test_reps_sorted_deterministically():
    reps = numeric_reps(Frac(6, 25))
    keys = [(rep.omega.real, rep.omega.imag) for rep in reps]
    assert keys == sorted(keys)


def test_roots_annihilate_defining_polynomial():
    for q, p in ((2, 5), (2, 7), (6, 25)):
        data = riley_polynomials(Frac(q, p))
        scale = sum(abs(c) for c in data.poly)
        for rep in numeric_reps(Frac(q, p)):
            assert abs(poly_eval(data.poly, rep.omega)) < 1e-10 * scale
            # the entry polynomials vanish simultaneously at each root
            for entry in data.entries:
                assert abs(poly_eval(entry, rep.omega)) < 1e-8 * (
                    1 + sum(abs(c) for c in entry)
                )


def test_evaluate_basics():
    rep = numeric_reps(Frac(2, 5))[0]
    assert evaluate((), rep) == (1, 0, 0, 1)
    assert evaluate(parse_word("a"), rep) == (1, 1, 0, 1)
    w = parse_word("abAB")
    img = mat_mul(evaluate(w, rep), evaluate(inverse(w), rep))
    assert dist_pm_identity(img) < 1e-12


def test_relator_image_is_identity():
    for q, p in ((2, 5), (2, 7), (4, 7)):
        f = Frac(q, p)
        u = relator(f).u
        for rep in numeric_reps(f):
            img = evaluate(u, rep)
            assert max(abs(img[0] - 1), abs(img[1]), abs(img[2]), abs(img[3] - 1)) < 1e-9


def test_long_meridians_are_parabolic():
    for params in ((1, 1, 1), (2, 1, 1), (1, 2, -1)):
        knot = GenusOneKnot(*params)
        mw = long_meridian_words(knot)
        for rep in numeric_reps(knot.fraction):
            for w in (mw.x_l, mw.y_l):
                tr = evaluate(w, rep)[0] + evaluate(w, rep)[3]
                assert min(abs(tr - 2), abs(tr + 2)) < 1e-8


def test_evaluate_is_multiplicative():
    rng = random.Random(11)
    rep = numeric_reps(Frac(2, 7))[0]
    for _ in range(40):
        u = tuple(rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 12)))
        v = tuple(rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 12)))
        lhs = evaluate(u + v, rep)
        rhs = mat_mul(evaluate(u, rep), evaluate(v, rep))
        assert max(abs(x - y) for x, y in zip(lhs, rhs)) < 1e-9 * (len(u) + len(v) + 1)


def test_mat_inv():
    rep = numeric_reps(Frac(2, 5))[0]
    m = evaluate(parse_word("ab"), rep)
    assert dist_pm_identity(mat_mul(m, mat_inv(m))) < 1e-14
