import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from hyperbridge import (
    BinaryQuartic,
    Hypermatrix222,
    Hypermatrix2222,
    apply_sl2,
    cayley_det,
    contract_last,
    has_repeated_root,
    j_invariant,
    permute_axes,
    quartic_from_hypermatrix,
    quartic_invariants,
    schlafli_delta,
)
from hyperbridge.errors import SingularCurve, ZeroQuartic
from hyperbridge.selftest import random_unimodular

from conftest import random_h222, random_h2222

X, Y = sympy.symbols("x y")


def outer3(t, u, v):
    return Hypermatrix222.from_function(lambda i, j, k: t[i] * u[j] * v[k])


def outer4(w, t, u, v):
    return Hypermatrix2222.from_function(lambda i, j, k, l: w[i] * t[j] * u[k] * v[l])


def pencil_discriminant(a: Hypermatrix222):
    """Discriminant in x of det(x S0 + S1), the slices taken along the first index."""
    S0, S1 = a.slice(0, 0), a.slice(0, 1)
    m = sympy.Matrix(2, 2, lambda r, c: X * S0[r, c] + S1[r, c])
    poly = sympy.Poly(sympy.expand(m.det()), X)
    coeffs = [sympy.Rational(c) for c in poly.all_coeffs()]
    if poly.degree() < 2:
        coeffs = [0] * (3 - len(coeffs)) + coeffs
    a2, a1, a0 = coeffs
    return Fraction(int(sympy.numer(a1**2 - 4 * a2 * a0)), int(sympy.denom(a1**2 - 4 * a2 * a0)))


# -- cayley_det -------------------------------------------------------------

def test_cayley_det_corner_examples():
    assert cayley_det(Hypermatrix222.from_corners(1, 0, 0, 0, 0, 0, 0, 1)) == 1
    assert cayley_det(Hypermatrix222.from_corners(1, 0, 0, 1, 1, 0, 0, 1)) == 0


def test_cayley_det_matches_pencil_discriminant(rng):
    for _ in range(50):
        a = random_h222(rng)
        assert cayley_det(a) == pencil_discriminant(a)


def test_rank_one_is_singular(rng):
    for _ in range(25):
        t, u, v = ([rng.randint(-4, 4) for _ in range(2)] for _ in range(3))
        a = outer3(t, u, v)
        assert cayley_det(a) == 0
        # (t', u', v') with u' _|_ u and v' _|_ v kills every partial derivative
        tp, up, vp = (1, 0), (-u[1], u[0]), (-v[1], v[0])
        for i in (0, 1):
            assert sum(a[i, j, k] * up[j] * vp[k] for j, k in itertools.product((0, 1), repeat=2)) == 0


# -- quartic_from_hypermatrix ---------------------------------------------------

def test_zero_hypermatrix_gives_zero_quartic():
    assert quartic_from_hypermatrix(Hypermatrix2222.zeros()).is_zero()


def test_last_slot_zero_kills_y_dependence(rng):
    a4 = Hypermatrix2222.from_function(lambda i, j, k, l: rng.randint(-5, 5) if l == 0 else 0)
    q = quartic_from_hypermatrix(a4)
    assert q.coefficients[1:] == (0, 0, 0, 0)
    assert q.A == cayley_det(contract_last(a4, (1, 0)))


def test_quartic_matches_direct_evaluation(rng):
    for _ in range(10):
        a4 = random_h2222(rng, -9, 9)
        q = quartic_from_hypermatrix(a4)
        for _ in range(20):
            x = Fraction(rng.randint(-30, 30), rng.randint(1, 7))
            y = Fraction(rng.randint(-30, 30), rng.randint(1, 7))
            assert q(x, y) == cayley_det(contract_last(a4, (x, y)))


# -- quartic_invariants -------------------------------------------------------

@pytest.mark.parametrize("coeffs, S, T, delta", [
    ((1, 0, 0, 0, 1), Fraction(1), Fraction(0), Fraction(1)),
    ((1, 0, -2, 0, 1), Fraction(4, 3), Fraction(-8, 27), Fraction(0)),
    ((0, 0, 1, 0, 0), Fraction(1, 12), Fraction(-1, 216), Fraction(0)),
])
def test_quartic_invariants_examples(coeffs, S, T, delta):
    inv = quartic_invariants(BinaryQuartic.of(coeffs))
    assert (inv.S, inv.T, inv.delta) == (S, T, delta)


def test_plain_coefficients_would_fail():
    # the same formulas on unweighted coefficients give 1225 for (x^2 - y^2)^2
    A, B, C, D, E = 1, 0, -2, 0, 1
    S = A * E - 4 * B * D + 3 * C**2
    T = A * C * E + 2 * B * C * D - A * D**2 - C**3 - E * B**2
    assert S**3 - 27 * T**2 == 1225


@given(st.lists(st.integers(-9, 9), min_size=5, max_size=5))
def test_integer_companions(coeffs):
    q = BinaryQuartic.of(coeffs)
    A, B, C, D, E = q.coefficients
    inv = quartic_invariants(q)
    assert inv.I == 12 * A * E - 3 * B * D + C**2
    assert inv.Jcov == 72 * A * C * E + 9 * B * C * D - 27 * A * D**2 - 27 * B**2 * E - 2 * C**3
    assert 6912 * inv.delta == 4 * inv.I**3 - inv.Jcov**2
    assert inv.delta == inv.S**3 - 27 * inv.T**2


@given(st.lists(st.integers(-9, 9), min_size=5, max_size=5).filter(lambda c: c[0] != 0))
def test_delta_is_scaled_polynomial_discriminant(coeffs):
    # disc(f) = (4 I^3 - Jcov^2) / 27 = 256 delta for a genuine quartic
    q = BinaryQuartic.of(coeffs)
    f = sum(c * X ** (4 - i) for i, c in enumerate(coeffs))
    assert sympy.discriminant(f, X) == 256 * quartic_invariants(q).delta


# -- schlafli_delta -------------------------------------------------------------

def test_schlafli_zero():
    assert schlafli_delta(Hypermatrix2222.zeros()) == 0


@pytest.mark.parametrize("lam", [-3, 2, 5])
def test_schlafli_homogeneity(rng, lam):
    a4 = random_h2222(rng)
    assert schlafli_delta(a4.scale(lam)) == lam**24 * schlafli_delta(a4)


def test_schlafli_rank_one(rng):
    for _ in range(10):
        vecs = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(4)]
        a4 = outer4(*vecs)
        assert quartic_from_hypermatrix(a4).is_zero()
        assert schlafli_delta(a4) == 0


def test_invariants_unchanged_by_slot_actions(rng):
    for _ in range(20):
        a4 = random_h2222(rng)
        before = quartic_invariants(quartic_from_hypermatrix(a4))
        moved = apply_sl2(a4, rng.randrange(4), random_unimodular(rng))
        moved = permute_axes(moved, rng.sample(range(4), 4))
        assert quartic_invariants(quartic_from_hypermatrix(moved)) == before


# -- j_invariant --------------------------------------------------------------

def test_j_examples():
    assert j_invariant(BinaryQuartic.of([1, 0, 0, 0, 1])) == 1
    with pytest.raises(SingularCurve):
        j_invariant(BinaryQuartic.of([1, 0, -2, 0, 1]))


@given(st.lists(st.integers(-9, 9), min_size=5, max_size=5),
       st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(lambda v: v != 0))
def test_j_scale_free(coeffs, lam):
    q = BinaryQuartic.of(coeffs)
    if quartic_invariants(q).delta == 0:
        return
    assert j_invariant(q.scale(lam)) == j_invariant(q)


# -- has_repeated_root ----------------------------------------------------------

@pytest.mark.parametrize("coeffs, expected", [
    ((1, 0, 0, 0, 1), False),
    ((1, 0, -2, 0, 1), True),
    ((0, 1, 0, 0, 0), True),   # x^3 y
    ((0, 0, 1, 0, 0), True),   # x^2 y^2
    ((1, 0, 0, 0, 0), True),   # x^4
    ((0, 1, 0, 0, 1), False),  # simple root at infinity only
])
def test_repeated_root_examples(coeffs, expected):
    assert has_repeated_root(BinaryQuartic.of(coeffs)) is expected


def test_repeated_root_zero_quartic():
    with pytest.raises(ZeroQuartic):
        has_repeated_root(BinaryQuartic.of([0] * 5))


def _expand(factors):
    poly = sympy.Poly(sympy.expand(sympy.Mul(*factors)), X, Y)
    return BinaryQuartic.of([int(poly.coeff_monomial(X ** (4 - i) * Y**i)) for i in range(5)])


@given(st.integers(-5, 5), st.integers(1, 4), st.lists(st.integers(-6, 6), min_size=3, max_size=3))
def test_constructed_double_roots(r, s, quad):
    q = _expand([(s * X - r * Y) ** 2, quad[0] * X**2 + quad[1] * X * Y + quad[2] * Y**2])
    if q.is_zero():
        return
    assert has_repeated_root(q)
    assert quartic_invariants(q).delta == 0
