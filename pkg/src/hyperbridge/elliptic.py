"""Elliptic curves over Q: curve models, the chord-tangent group law, 2-torsion."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Union

from ._rational import RationalLike, as_rational, format_rational, rational_sqrt
from .errors import DegenerateCubic, PointNotOnCurve, SingularCurve

__all__ = [
    "WeierstrassCurve",
    "CubicCurve",
    "FactoredCurve",
    "CurvePoint",
    "CoordinateMap",
    "cubic_to_weierstrass",
    "add_points",
    "negate",
    "multiply",
    "two_torsion",
    "has_full_two_torsion",
    "shift_to_origin",
    "is_torsion",
    "weierstrass_j",
    "rational_roots_cubic",
    "parse_point",
    "point_to_json",
]

MAZUR_BOUND = 12


class _Curve:
    def rhs(self, x: Fraction) -> Fraction:
        raise NotImplementedError

    def contains(self, x: RationalLike, y: RationalLike) -> bool:
        x, y = as_rational(x), as_rational(y)
        return y * y == self.rhs(x)

    def point(self, x: RationalLike, y: RationalLike) -> "CurvePoint":
        return CurvePoint(self, as_rational(x), as_rational(y))

    def infinity(self) -> "CurvePoint":
        return CurvePoint(self, None, None)


@dataclass(frozen=True)
class WeierstrassCurve(_Curve):
    """y^2 = x^3 + alpha x + beta, nonsingular."""

    alpha: Fraction
    beta: Fraction
    check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))
        if self.check and self.discriminant_term() == 0:
            raise SingularCurve(f"{self} is singular (4 alpha^3 + 27 beta^2 = 0)")

    @classmethod
    def unchecked(cls, alpha: RationalLike, beta: RationalLike) -> "WeierstrassCurve":
        return cls(alpha, beta, check=False)

    def discriminant_term(self) -> Fraction:
        return 4 * self.alpha**3 + 27 * self.beta**2

    def rhs(self, x: Fraction) -> Fraction:
        return x**3 + self.alpha * x + self.beta

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({format_rational(self.alpha)})x + ({format_rational(self.beta)})"

    def to_json(self) -> dict:
        return {"alpha": format_rational(self.alpha), "beta": format_rational(self.beta)}


@dataclass(frozen=True)
class CubicCurve(_Curve):
    """y^2 = a x^3 + b x^2 + c x + d with a != 0."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.a == 0:
            raise DegenerateCubic("leading coefficient a must be nonzero")

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def rhs(self, x: Fraction) -> Fraction:
        return ((self.a * x + self.b) * x + self.c) * x + self.d

    def __str__(self) -> str:
        a, b, c, d = (format_rational(v) for v in self.coefficients)
        return f"y^2 = ({a})x^3 + ({b})x^2 + ({c})x + ({d})"

    def to_json(self) -> dict:
        return {k: format_rational(getattr(self, k)) for k in "abcd"}


@dataclass(frozen=True)
class FactoredCurve:
    """y^2 = 4 (l - k x)(n - m x)(q - p x)."""

    k: Fraction
    m: Fraction
    p: Fraction
    l: Fraction  # noqa: E741
    n: Fraction
    q: Fraction

    def __post_init__(self):
        for name in ("k", "m", "p", "l", "n", "q"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.k * self.m * self.p == 0:
            raise DegenerateCubic("k m p must be nonzero")

    def to_cubic(self) -> CubicCurve:
        k, m, p, l, n, q = self.k, self.m, self.p, self.l, self.n, self.q
        return CubicCurve(
            -4 * k * m * p,
            4 * (k * m * q + k * p * n + m * p * l),
            -4 * (k * n * q + m * l * q + p * l * n),
            4 * l * n * q,
        )


@dataclass(frozen=True)
class CurvePoint:
    """A rational point of ``curve``; ``x is None`` marks the point at infinity."""

    curve: _Curve
    x: Optional[Fraction]
    y: Optional[Fraction]

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("give both coordinates or neither")
        if self.x is not None and not self.curve.contains(self.x, self.y):
            raise PointNotOnCurve(
                f"({format_rational(self.x)}, {format_rational(self.y)}) is not on {self.curve}"
            )

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "CurvePoint":
        return negate(self)

    def __add__(self, other: "CurvePoint") -> "CurvePoint":
        return add_points(self.curve, self, other)

    def __str__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


def point_to_json(P: CurvePoint) -> Union[str, list[str]]:
    if P.is_infinity:
        return "O"
    return [format_rational(P.x), format_rational(P.y)]


def parse_point(curve: _Curve, text) -> CurvePoint:
    """Accept "O", "x,y", or a two-element list of rationals."""
    if isinstance(text, str):
        text = text.strip()
        if text.upper() == "O":
            return curve.infinity()
        text = text.strip("()").split(",")
    x, y = text
    return curve.point(as_rational(x.strip() if isinstance(x, str) else x),
                       as_rational(y.strip() if isinstance(y, str) else y))


@dataclass(frozen=True)
class CoordinateMap:
    """Invertible affine change X = scale*x + shift, Y = scale*y between two curves."""

    source: CubicCurve
    target: WeierstrassCurve
    scale: Fraction
    shift: Fraction

    def forward(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return self.target.infinity()
        return self.target.point(self.scale * P.x + self.shift, self.scale * P.y)

    def backward(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return self.source.infinity()
        return self.source.point((P.x - self.shift) / self.scale, P.y / self.scale)


def _taylor_shift(coeffs: list[Fraction], h: Fraction) -> list[Fraction]:
    """Coefficients (lowest first) of p(x + h)."""
    out = list(coeffs)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += h * out[j + 1]
    return out


def cubic_to_weierstrass(c: CubicCurve) -> tuple[WeierstrassCurve, CoordinateMap]:
    """Bring y^2 = a x^3 + ... to y^2 = x^3 + alpha x + beta.

    X = a x turns the curve into Y^2 = X^3 + b X^2 + a c X + a^2 d with Y = a y;
    shifting X by b/3 removes the square term.
    """
    if c.a == 0:
        raise DegenerateCubic("leading coefficient a must be nonzero")
    a, b, cc, d = c.coefficients
    monic = [a * a * d, a * cc, b, Fraction(1)]
    depressed = _taylor_shift(monic, -b / 3)
    assert depressed[2] == 0 and depressed[3] == 1
    target = WeierstrassCurve(depressed[1], depressed[0])
    return target, CoordinateMap(c, target, a, b / 3)


def negate(P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.curve, P.x, -P.y)


def add_points(curve: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Chord-tangent sum on a short Weierstrass curve."""
    if P.curve != curve or Q.curve != curve:
        raise PointNotOnCurve("points belong to a different curve")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y == 0:
            return curve.infinity()
        slope = (3 * P.x * P.x + curve.alpha) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x3 = slope * slope - P.x - Q.x
    y3 = slope * (P.x - x3) - P.y
    return curve.point(x3, y3)


def multiply(curve: WeierstrassCurve, n: int, P: CurvePoint) -> CurvePoint:
    """n * P by double-and-add; negative n allowed."""
    if n < 0:
        return multiply(curve, -n, negate(P))
    result = curve.infinity()
    addend = P
    while n:
        if n & 1:
            result = add_points(curve, result, addend)
        addend = add_points(curve, addend, addend)
        n >>= 1
    return result


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _first_rational_root(ints: list[int]) -> Optional[Fraction]:
    """Rational-root theorem search on an integer cubic with nonzero constant term."""
    lead, const = ints[0], ints[3]
    for p in _divisors(const):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if ((ints[0] * cand + ints[1]) * cand + ints[2]) * cand + ints[3] == 0:
                    return cand
    return None


def rational_roots_cubic(a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> list[Fraction]:
    """Distinct rational roots of a x^3 + b x^2 + c x + d (a != 0), ascending."""
    coeffs = [as_rational(v) for v in (a, b, c, d)]
    den = 1
    for v in coeffs:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in coeffs]

    roots: set[Fraction] = set()
    # peel off x = 0 first so the constant term is nonzero for the divisor search
    while ints and ints[-1] == 0:
        roots.add(Fraction(0))
        ints.pop()
    if len(ints) == 4:
        r = _first_rational_root(ints)
        if r is None:
            return sorted(roots)
        roots.add(r)
        # deflate: a x^3 + b x^2 + c x + d = (x - r)(a x^2 + b' x + c')
        q2 = Fraction(ints[0])
        q1 = ints[1] + r * q2
        q0 = ints[2] + r * q1
        ints_q = [q2, q1, q0]
    else:
        ints_q = [Fraction(v) for v in ints]

    # remaining quadratic / linear part
    if len(ints_q) == 3:
        A, B, C = ints_q
        disc = rational_sqrt(B * B - 4 * A * C)
        if disc is not None:
            roots.update({(-B + disc) / (2 * A), (-B - disc) / (2 * A)})
    elif len(ints_q) == 2:
        roots.add(-ints_q[1] / ints_q[0])
    return sorted(roots)


def two_torsion(c: CubicCurve) -> list[CurvePoint]:
    """All rational points with y = 0."""
    if c.a == 0:
        raise DegenerateCubic("leading coefficient a must be nonzero")
    return [c.point(r, 0) for r in rational_roots_cubic(*c.coefficients)]


def has_full_two_torsion(c: CubicCurve) -> bool:
    return len(two_torsion(c)) == 3


def shift_to_origin(c: CubicCurve, P: CurvePoint) -> CubicCurve:
    """Translate x so that the affine point P sits at x' = 0."""
    if P.is_infinity:
        raise PointNotOnCurve("need an affine point")
    if not c.contains(P.x, P.y):
        raise PointNotOnCurve(f"{P} is not on {c}")
    d, cc, b, a = _taylor_shift([c.d, c.c, c.b, c.a], P.x)
    return CubicCurve(a, b, cc, d)


def is_torsion(curve: WeierstrassCurve, P: CurvePoint) -> bool:
    """True iff n P = O for some 1 <= n <= 12 (Mazur's bound on torsion orders)."""
    Q = P
    for _ in range(MAZUR_BOUND):
        if Q.is_infinity:
            return True
        Q = add_points(curve, Q, P)
    return False


def weierstrass_j(curve: WeierstrassCurve) -> Fraction:
    """The standard j = 1728 * 4 alpha^3 / (4 alpha^3 + 27 beta^2)."""
    denom = curve.discriminant_term()
    if denom == 0:
        raise SingularCurve("singular curve has no j-invariant")
    return 1728 * 4 * curve.alpha**3 / denom
