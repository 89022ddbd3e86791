"""Pairs of trilinear equations on a 2x2x2x2 hypermatrix, and their elliptic quartic.

The system is ``sum_{j,k,l} a[i,j,k,l] z_j y_k x_l = 0`` for i = 0, 1.  For a
fixed x, ``M(y, x)[i, j] = sum_{k,l} a[i,j,k,l] y_k x_l`` must be singular, so
det M is a binary quadratic in y whose discriminant is Cayley's
hyperdeterminant of ``contract_last(a, x)``.  Rational y exist exactly when
that value, the quartic Q(x0, x1), is a square.
"""
from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence

from ._rational import RationalLike, as_rational, format_rational, primitive_integer_vector, rational_sqrt
from .elliptic import CubicCurve, CurvePoint, _taylor_shift
from .errors import PointNotOnQuartic, SingularQuartic
from .hypermatrix import Hypermatrix2222, Vector2, contract_last, contract_to_matrix
from .invariants import (
    BinaryQuartic,
    QuarticInvariants,
    cayley_det,
    quartic_from_hypermatrix,
    quartic_invariants,
)

__all__ = [
    "TrilinearSystem",
    "TrilinearSolution",
    "SearchReport",
    "QuarticReduction",
    "BridgeIdentityError",
    "reduce_to_quartic",
    "is_rational_square",
    "det_quadratic_in_y",
    "solve_given_x",
    "verify_solution",
    "canonical_candidates",
    "search_solutions",
    "plant_solution",
    "quartic_to_cubic",
]

IntVec = tuple[int, int]


class BridgeIdentityError(AssertionError):
    """disc_y det M(y, x) disagreed with cayley_det(contract_last(a, x))."""


@dataclass(frozen=True)
class TrilinearSystem:
    a4: Hypermatrix2222

    def __post_init__(self):
        if not isinstance(self.a4, Hypermatrix2222):
            object.__setattr__(self, "a4", Hypermatrix2222(self.a4))
        if any(v.denominator != 1 for v in self.a4.entries):
            raise ValueError("trilinear coefficients must be integers")

    def residuals(self, x, y, z) -> tuple[Fraction, Fraction]:
        vals = []
        for i in (0, 1):
            total = Fraction(0)
            for j, k, l in itertools.product((0, 1), repeat=3):
                total += self.a4[i, j, k, l] * z[j] * y[k] * x[l]
            vals.append(total)
        return vals[0], vals[1]


@dataclass(frozen=True)
class TrilinearSolution:
    x: IntVec
    y: IntVec
    z: IntVec
    degenerate: bool = False

    @classmethod
    def canonical(cls, x, y, z, degenerate: bool = False) -> "TrilinearSolution":
        return cls(
            primitive_integer_vector(x),
            primitive_integer_vector(y),
            primitive_integer_vector(z),
            degenerate,
        )

    @property
    def key(self) -> tuple[IntVec, IntVec, IntVec]:
        return (self.x, self.y, self.z)

    def to_json(self) -> dict:
        return {"x": list(self.x), "y": list(self.y), "z": list(self.z), "degenerate": self.degenerate}


@dataclass
class SearchReport:
    bound: int
    quartic: BinaryQuartic
    invariants: QuarticInvariants
    j: Optional[Fraction]
    solutions: list[TrilinearSolution] = field(default_factory=list)
    candidates_tested: int = 0
    degenerate_quartic: bool = False

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "candidates_tested": self.candidates_tested,
            "degenerate_quartic": self.degenerate_quartic,
            "quartic": self.quartic.to_json(),
            "S": format_rational(self.invariants.S),
            "T": format_rational(self.invariants.T),
            "delta": format_rational(self.invariants.delta),
            "J": None if self.j is None else format_rational(self.j),
            "solutions": [s.to_json() for s in self.solutions],
        }


def is_rational_square(r: RationalLike) -> Optional[Fraction]:
    return rational_sqrt(r)


def det_quadratic_in_y(a4: Hypermatrix2222, x) -> tuple[Fraction, Fraction, Fraction]:
    """(alpha, beta, gamma) with det M(y, x) = alpha y0^2 + beta y0 y1 + gamma y1^2."""
    alpha = contract_to_matrix(a4, (1, 0), x).det()
    gamma = contract_to_matrix(a4, (0, 1), x).det()
    beta = contract_to_matrix(a4, (1, 1), x).det() - alpha - gamma
    return alpha, beta, gamma


def _checked_discriminant(a4: Hypermatrix2222, x) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    alpha, beta, gamma = det_quadratic_in_y(a4, x)
    disc = beta * beta - 4 * alpha * gamma
    expected = cayley_det(contract_last(a4, x))
    if disc != expected:
        raise BridgeIdentityError(
            f"disc_y det M = {format_rational(disc)} but cayley_det = {format_rational(expected)}"
        )
    return alpha, beta, gamma, disc


def reduce_to_quartic(sys: TrilinearSystem) -> BinaryQuartic:
    """Q(x0, x1) = disc_y det M(y, x), computed through M and through the contraction."""
    via_matrix = []
    for x in ((1, 0), (0, 1), (1, 1), (1, -1), (2, 1)):
        alpha, beta, gamma = det_quadratic_in_y(sys.a4, x)
        via_matrix.append(beta * beta - 4 * alpha * gamma)
    A, E, plus, minus, two = via_matrix
    odd = (plus - minus) / 2
    C = (plus + minus) / 2 - A - E
    B = (two - 16 * A - 4 * C - E - 2 * odd) / 6
    direct = BinaryQuartic(A, B, C, odd - B, E)
    other = quartic_from_hypermatrix(sys.a4)
    if direct != other:
        raise BridgeIdentityError("quartic from M disagrees with quartic from contraction")
    return direct


def _kernel(m) -> tuple[Optional[tuple[Fraction, Fraction]], bool]:
    """A nonzero kernel vector of a singular 2x2 matrix; (1, 0) flagged if m = 0."""
    for p, q in ((m.m00, m.m01), (m.m10, m.m11)):
        if p != 0 or q != 0:
            return (q, -p), False
    return (Fraction(1), Fraction(0)), True


def solve_given_x(sys: TrilinearSystem, x) -> list[TrilinearSolution]:
    """All (y, z) completing x to a solution, when the y-quadratic splits over Q."""
    x = Vector2.of(*x)
    if x.is_zero():
        raise ValueError("x must be nonzero")
    alpha, beta, gamma, disc = _checked_discriminant(sys.a4, x)

    pencil_degenerate = alpha == 0 and beta == 0 and gamma == 0
    if pencil_degenerate:
        ys = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    else:
        root = rational_sqrt(disc)
        if root is None:
            return []
        if alpha != 0:
            ys = [(-beta + root, 2 * alpha), (-beta - root, 2 * alpha)]
        else:
            # y1 (beta y0 + gamma y1) = 0
            ys = [(Fraction(1), Fraction(0))]
            if beta != 0:
                ys.append((-gamma, beta))

    out: list[TrilinearSolution] = []
    seen = set()
    for y in ys:
        z, flat = _kernel(contract_to_matrix(sys.a4, y, x))
        sol = TrilinearSolution.canonical(x, y, z, pencil_degenerate or flat)
        if sol.key not in seen:
            seen.add(sol.key)
            out.append(sol)
    return out


def verify_solution(sys: TrilinearSystem, sol: TrilinearSolution) -> bool:
    return sys.residuals(sol.x, sol.y, sol.z) == (0, 0)


def canonical_candidates(bound: int) -> Iterator[IntVec]:
    """Projective x = (x0 : x1), coprime, |x0|, |x1| <= bound, x1 >= 0 (and x0 = 1 when x1 = 0)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    yield (1, 0)
    for x1 in range(1, bound + 1):
        for x0 in range(-bound, bound + 1):
            if gcd(x0, x1) == 1:
                yield (x0, x1)


def _search_chunk(args) -> tuple[int, list[TrilinearSolution]]:
    sys, quartic, chunk = args
    found = []
    for x in chunk:
        if rational_sqrt(quartic(*x)) is None:
            continue
        found.extend(s for s in solve_given_x(sys, x) if verify_solution(sys, s))
    return len(chunk), found


def search_solutions(sys: TrilinearSystem, bound: int, workers: int = 1) -> SearchReport:
    """Enumerate projective x up to ``bound`` and collect every rational solution.

    With ``workers > 1`` the candidate list is cut into contiguous chunks and
    the results are merged in candidate order, so the report does not depend
    on the worker count.
    """
    quartic = reduce_to_quartic(sys)
    inv = quartic_invariants(quartic)
    j = inv.S**3 / inv.delta if inv.delta != 0 else None
    report = SearchReport(bound, quartic, inv, j, degenerate_quartic=quartic.is_zero())

    candidates = list(canonical_candidates(bound))
    if workers > 1 and len(candidates) > 1:
        size = -(-len(candidates) // workers)
        chunks = [candidates[i:i + size] for i in range(0, len(candidates), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_chunk, [(sys, quartic, c) for c in chunks]))
    else:
        results = [_search_chunk((sys, quartic, candidates))]

    seen = set()
    for tested, found in results:
        report.candidates_tested += tested
        for sol in found:
            if sol.key not in seen:
                seen.add(sol.key)
                report.solutions.append(sol)
    return report


def plant_solution(x, y, z, seed) -> TrilinearSystem:
    """A random integer system that vanishes on the given (x, y, z).

    Fourteen entries are drawn from [-9, 9].  For each i the constraint is
    solved for the entry a[i, j, k, l] whose coefficient z_j y_k x_l is
    nonzero with the smallest absolute value (first in index order on ties);
    the free entries of that slice are redrawn until the solved value is an
    integer.
    """
    x, y, z = (tuple(int(v) for v in vec) for vec in (x, y, z))
    for vec in (x, y, z):
        if vec == (0, 0):
            raise ValueError("planted vectors must be nonzero")
    rng = random.Random(seed)
    coeff = {
        (j, k, l): z[j] * y[k] * x[l] for j, k, l in itertools.product((0, 1), repeat=3)
    }
    pivot = min((jkl for jkl in coeff if coeff[jkl] != 0), key=lambda jkl: (abs(coeff[jkl]), jkl))
    entries: dict[tuple[int, ...], int] = {}
    for i in (0, 1):
        while True:
            free = {jkl: rng.randint(-9, 9) for jkl in coeff if jkl != pivot}
            rest = sum(coeff[jkl] * v for jkl, v in free.items())
            if rest % coeff[pivot] == 0:
                break
        free[pivot] = -rest // coeff[pivot]
        for jkl, v in free.items():
            entries[(i,) + jkl] = v
    return TrilinearSystem(Hypermatrix2222.from_function(lambda *idx: entries[idx]))


# -- quartic to cubic -------------------------------------------------------

@dataclass(frozen=True)
class QuarticReduction:
    """A cubic model of w^2 = Q(x, 1) built from one rational point.

    ``kind`` is ``"generic"`` (base point with w != 0, sent to infinity),
    ``"root"`` (w = 0) or either of those preceded by ``x -> 1/x`` when the
    base point is at infinity (``reversed``).
    """

    quartic: BinaryQuartic
    base: tuple[Optional[Fraction], Fraction]
    curve: CubicCurve
    kind: str
    reversed: bool
    shift: Fraction
    params: tuple[Fraction, ...]

    def map_point(self, x: Optional[RationalLike], w: RationalLike) -> CurvePoint:
        """Image of the quartic point (x, w); ``x = None`` is the point at infinity."""
        w = as_rational(w)
        if x is None:
            if not self.reversed:
                raise ValueError("points at infinity need a reduction based at infinity")
            if w * w != self.quartic.A:
                raise PointNotOnQuartic("w^2 != A at infinity")
            return self._map_shifted(Fraction(0) - self.shift, w)
        x = as_rational(x)
        if w * w != self.quartic(x, 1):
            raise PointNotOnQuartic(f"w^2 != Q({format_rational(x)}, 1)")
        if self.reversed:
            if x == 0:
                raise ZeroDivisionError("x = 0 goes to infinity under x -> 1/x")
            x, w = 1 / x, w / (x * x)
        return self._map_shifted(x - self.shift, w)

    def _map_shifted(self, t: Fraction, w: Fraction) -> CurvePoint:
        if self.kind == "root":
            if t == 0:
                return self.curve.infinity()
            return self.curve.point(1 / t, w / (t * t))
        q, a1, a2, a3, c, d = self.params
        if t == 0:
            if w == q:
                return self.curve.infinity()
            X, Y = -a2, a1 * a2 - a3
        else:
            X = (2 * q * (w + q) + d * t) / (t * t)
            Y = (4 * q * q * (w + q) + 2 * q * (d * t + c * t * t) - d * d * t * t / (2 * q)) / t**3
        return self.curve.point(X, Y + (a1 * X + a3) / 2)

    def inverse_point(self, P: CurvePoint) -> Optional[tuple[Optional[Fraction], Fraction]]:
        """Quartic point over P, or None where the inverse map is not defined."""
        if P.is_infinity:
            return self.base
        if self.kind == "root":
            if P.x == 0:
                return None
            t, w = 1 / P.x, P.y / (P.x * P.x)
        else:
            q, a1, a2, a3, c, d = self.params
            X = P.x
            Y = P.y - (a1 * X + a3) / 2
            if Y == 0:
                return None
            t = (2 * q * (X + c) - d * d / (2 * q)) / Y
            w = -q + t * (t * X - d) / (2 * q)
        x = t + self.shift
        if self.reversed:
            if x == 0:
                return (None, w)
            x, w = 1 / x, w / (x * x)
        return x, w


def quartic_to_cubic(q: BinaryQuartic, point: tuple[Optional[RationalLike], RationalLike]) -> QuarticReduction:
    """Reduce w^2 = Q(x, 1) to a cubic model using the rational point ``point``.

    ``point`` is ``(x0, w)``; ``x0 = None`` means the point at infinity, which
    exists when A = w^2.  The quartic is moved so the point sits at x = 0;
    a point with w != 0 is then sent to infinity by the classical
    change of variables, and a root (w = 0) by x -> 1/x after dividing out x.
    """
    if quartic_invariants(q).delta == 0:
        raise SingularQuartic("quartic has a repeated root")
    x0, w = point
    w = as_rational(w)
    reversed_ = x0 is None
    work = BinaryQuartic(q.E, q.D, q.C, q.B, q.A) if reversed_ else q
    x0 = Fraction(0) if reversed_ else as_rational(x0)
    if w * w != work(x0, 1):
        raise PointNotOnQuartic("the base point does not satisfy w^2 = Q(x0, 1)")

    f = _taylor_shift([work.E, work.D, work.C, work.B, work.A], x0)
    e0, d, c, b, a = f
    if w == 0:
        # w^2 = t (a t^3 + b t^2 + c t + d); u = 1/t, v = w/t^2
        curve = CubicCurve(d, c, b, a)
        base = (None if reversed_ else x0, w)
        return QuarticReduction(q, base, curve, "root", reversed_, x0, ())
    qq = w
    a1 = d / qq
    a2 = c - d * d / (4 * qq * qq)
    a3 = 2 * qq * b
    a4 = -4 * qq * qq * a
    a6 = a2 * a4
    curve = CubicCurve(1, a2 + a1 * a1 / 4, a4 + a1 * a3 / 2, a6 + a3 * a3 / 4)
    base = (None if reversed_ else x0, w)
    return QuarticReduction(q, base, curve, "generic", reversed_, x0, (qq, a1, a2, a3, c, d))
