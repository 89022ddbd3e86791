"""Cayley's and Schlafli's hyperdeterminants and the invariants of binary quartics.

The quartic invariants use binomially weighted coefficients.  For
``Q = A x^4 + B x^3 y + C x^2 y^2 + D x y^3 + E y^4`` put
``a0, a1, a2, a3, a4 = A, B/4, C/6, D/4, E``; then

    S = a0 a4 - 4 a1 a3 + 3 a2^2
    T = a0 a2 a4 + 2 a1 a2 a3 - a0 a3^2 - a2^3 - a4 a1^2
    delta = S^3 - 27 T^2

are SL(2) invariants and ``delta`` vanishes exactly when Q has a repeated
projective root.  The integer-coefficient companions are ``I = 12 S`` and
``Jcov = 432 T``, with ``4 I^3 - Jcov^2 = 6912 delta``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._rational import RationalLike, as_rational, format_rational
from .errors import SingularCurve, ZeroQuartic
from .hypermatrix import Hypermatrix222, Hypermatrix2222, contract_last

__all__ = [
    "BinaryQuartic",
    "QuarticInvariants",
    "cayley_det",
    "cayley_det_corners",
    "quartic_from_hypermatrix",
    "quartic_invariants",
    "schlafli_delta",
    "j_invariant",
    "has_repeated_root",
]


def cayley_det_corners(a, b, c, d, e, f, g, h):
    """Cayley's hyperdeterminant in the corner letters.

    Works on any ring elements (ints, Fractions, sympy symbols), which is what
    lets the cube-assignment search reuse it.
    """
    return (a * h + d * e - c * f - b * g) ** 2 - 4 * (a * d - b * c) * (e * h - f * g)


def cayley_det(a: Hypermatrix222) -> Fraction:
    return cayley_det_corners(*a.corners())


@dataclass(frozen=True)
class BinaryQuartic:
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    E: Fraction

    def __post_init__(self):
        for name in "ABCDE":
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def of(cls, coeffs: Sequence[RationalLike]) -> "BinaryQuartic":
        if len(coeffs) != 5:
            raise ValueError("a binary quartic has 5 coefficients")
        return cls(*coeffs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return (self.A, self.B, self.C, self.D, self.E)

    def __call__(self, x: RationalLike, y: RationalLike = 1) -> Fraction:
        x, y = as_rational(x), as_rational(y)
        A, B, C, D, E = self.coefficients
        return A * x**4 + B * x**3 * y + C * x**2 * y**2 + D * x * y**3 + E * y**4

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def scale(self, factor: RationalLike) -> "BinaryQuartic":
        factor = as_rational(factor)
        return BinaryQuartic(*(c * factor for c in self.coefficients))

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients]


@dataclass(frozen=True)
class QuarticInvariants:
    S: Fraction
    T: Fraction
    delta: Fraction

    @property
    def I(self) -> Fraction:  # noqa: E743
        return 12 * self.S

    @property
    def Jcov(self) -> Fraction:
        return 432 * self.T


def quartic_from_hypermatrix(a4: Hypermatrix2222) -> BinaryQuartic:
    """The quartic Q(x, y) = cayley_det(contract_last(a4, (x, y))).

    Coefficients come from exact interpolation at (1,0), (0,1), (1,1), (1,-1)
    and (2,1).
    """
    def q(x, y):
        return cayley_det(contract_last(a4, (x, y)))

    A = q(1, 0)
    E = q(0, 1)
    plus, minus = q(1, 1), q(1, -1)
    odd = (plus - minus) / 2          # B + D
    C = (plus + minus) / 2 - A - E
    rest = q(2, 1) - 16 * A - 4 * C - E  # 8B + 2D
    B = (rest - 2 * odd) / 6
    D = odd - B
    return BinaryQuartic(A, B, C, D, E)


def quartic_invariants(q: BinaryQuartic) -> QuarticInvariants:
    a0, a1, a2, a3, a4 = q.A, q.B / 4, q.C / 6, q.D / 4, q.E
    S = a0 * a4 - 4 * a1 * a3 + 3 * a2**2
    T = a0 * a2 * a4 + 2 * a1 * a2 * a3 - a0 * a3**2 - a2**3 - a4 * a1**2
    return QuarticInvariants(S, T, S**3 - 27 * T**2)


def schlafli_delta(a4: Hypermatrix2222) -> Fraction:
    """Schlafli's degree-24 hyperdeterminant, in the binomially normalized scale.

    Multiply by 6912 to get ``4 I^3 - Jcov^2`` of the integer-coefficient quartic.
    """
    return quartic_invariants(quartic_from_hypermatrix(a4)).delta


def j_invariant(q: BinaryQuartic) -> Fraction:
    """J = S^3 / delta; raises SingularCurve when delta = 0."""
    inv = quartic_invariants(q)
    if inv.delta == 0:
        raise SingularCurve("quartic has a repeated root; J is undefined")
    return inv.S**3 / inv.delta


# -- independent repeated-root test (plain polynomial gcd, no invariants) --

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_rem(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    # coefficient lists, lowest degree first
    num = list(num)
    while len(num) >= len(den):
        factor = num[-1] / den[-1]
        shift = len(num) - len(den)
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        num.pop()
        _trim(num)
    return num


def _poly_gcd_degree(p: list[Fraction], q: list[Fraction]) -> int:
    p, q = _trim(list(p)), _trim(list(q))
    while q:
        p, q = q, _poly_rem(p, q)
    return len(p) - 1


def has_repeated_root(q: BinaryQuartic) -> bool:
    """True iff the homogeneous quartic has a repeated projective root.

    A root at infinity of multiplicity >= 2 shows up as A = B = 0; finite
    repeated roots as a nonconstant gcd of Q(x, 1) and its derivative.
    """
    if q.is_zero():
        raise ZeroQuartic("the zero quartic has no roots to compare")
    if q.A == 0 and q.B == 0:
        return True
    f = [q.E, q.D, q.C, q.B, q.A]
    df = [i * c for i, c in enumerate(f)][1:]
    return _poly_gcd_degree(f, df) >= 1
