"""Exact 2x2x2 and 2x2x2x2 hypermatrices with contractions and slot actions.

Entries are stored flat in lexicographic index order with the last index
varying fastest, so entry ``(i, j, k)`` of a 2x2x2 hypermatrix lives at
position ``4*i + 2*j + k``.  For the 2x2x2 case the corners are also named
with the letters a..h in that same order::

    a=(0,0,0) b=(0,0,1) c=(0,1,0) d=(0,1,1)
    e=(1,0,0) f=(1,0,1) g=(1,1,0) h=(1,1,1)

so the two slices along the first index are ``[[a, b], [c, d]]`` and
``[[e, f], [g, h]]``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, NamedTuple, Sequence, Union

from ._rational import RationalLike, as_rational, format_rational
from .errors import NonUnimodular

__all__ = [
    "Vector2",
    "Matrix2",
    "Hypermatrix222",
    "Hypermatrix2222",
    "contract_last",
    "contract_to_matrix",
    "apply_sl2",
    "permute_axes",
    "hypermatrix_from_json",
    "hypermatrix_to_json",
]


class Vector2(NamedTuple):
    c0: Fraction
    c1: Fraction

    @classmethod
    def of(cls, c0: RationalLike, c1: RationalLike) -> "Vector2":
        return cls(as_rational(c0), as_rational(c1))

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0


class Matrix2(NamedTuple):
    m00: Fraction
    m01: Fraction
    m10: Fraction
    m11: Fraction

    @classmethod
    def of(cls, m00, m01, m10, m11) -> "Matrix2":
        return cls(*(as_rational(v) for v in (m00, m01, m10, m11)))

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls.of(1, 0, 0, 1)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return tuple.__getitem__(self, 2 * i + j)
        return tuple.__getitem__(self, idx)

    def det(self) -> Fraction:
        return self.m00 * self.m11 - self.m01 * self.m10

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.m00 * other.m00 + self.m01 * other.m10,
            self.m00 * other.m01 + self.m01 * other.m11,
            self.m10 * other.m00 + self.m11 * other.m10,
            self.m10 * other.m01 + self.m11 * other.m11,
        )

    def inverse(self) -> "Matrix2":
        det = self.det()
        if det == 0:
            raise ZeroDivisionError("singular 2x2 matrix")
        return Matrix2(self.m11 / det, -self.m01 / det, -self.m10 / det, self.m00 / det)

    def apply(self, v: Vector2) -> Vector2:
        return Vector2(self.m00 * v[0] + self.m01 * v[1], self.m10 * v[0] + self.m11 * v[1])


Index = tuple[int, ...]


@dataclass(frozen=True)
class _Hypermatrix:
    entries: tuple[Fraction, ...]

    order = 0

    def __init__(self, entries: Sequence[RationalLike]):
        entries = tuple(as_rational(v) for v in entries)
        if len(entries) != 2 ** self.order:
            raise ValueError(
                f"{type(self).__name__} needs {2 ** self.order} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zeros(cls):
        return cls([0] * 2 ** cls.order)

    @classmethod
    def from_function(cls, fn: Callable[..., RationalLike]):
        return cls([fn(*idx) for idx in cls.indices()])

    @classmethod
    def indices(cls) -> Iterator[Index]:
        return itertools.product((0, 1), repeat=cls.order)

    @property
    def shape(self) -> tuple[int, ...]:
        return (2,) * self.order

    def _flat(self, idx: Index) -> int:
        if len(idx) != self.order or any(i not in (0, 1) for i in idx):
            raise IndexError(f"bad index {idx!r} for shape {self.shape}")
        pos = 0
        for i in idx:
            pos = 2 * pos + i
        return pos

    def __getitem__(self, idx: Index) -> Fraction:
        return self.entries[self._flat(idx)]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)

    def scale(self, factor: RationalLike):
        factor = as_rational(factor)
        return type(self)([v * factor for v in self.entries])

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)([u + v for u, v in zip(self.entries, other.entries)])

    def __repr__(self) -> str:
        body = ", ".join(format_rational(v) for v in self.entries)
        return f"{type(self).__name__}([{body}])"


class Hypermatrix222(_Hypermatrix):
    order = 3

    @classmethod
    def from_corners(cls, a, b, c, d, e, f, g, h) -> "Hypermatrix222":
        return cls([a, b, c, d, e, f, g, h])

    def corners(self) -> tuple[Fraction, ...]:
        """The entries as the letters (a, b, c, d, e, f, g, h)."""
        return self.entries

    def slice(self, axis: int, value: int) -> Matrix2:
        """The 2x2 matrix obtained by fixing index ``axis`` to ``value``."""
        cells = []
        for r, c in itertools.product((0, 1), repeat=2):
            idx = [r, c]
            idx.insert(axis, value)
            cells.append(self[tuple(idx)])
        return Matrix2(*cells)


class Hypermatrix2222(_Hypermatrix):
    order = 4


AnyHypermatrix = Union[Hypermatrix222, Hypermatrix2222]


def _as_vector(x) -> Vector2:
    if isinstance(x, Vector2):
        return x
    c0, c1 = x
    return Vector2.of(c0, c1)


def contract_last(a4: Hypermatrix2222, x) -> Hypermatrix222:
    """Contract the last slot of ``a4`` with ``x``: b[i,j,k] = sum_l a4[i,j,k,l] x_l."""
    x = _as_vector(x)
    e = a4.entries
    return Hypermatrix222([e[2 * n] * x.c0 + e[2 * n + 1] * x.c1 for n in range(8)])


def contract_to_matrix(a4: Hypermatrix2222, y, x) -> Matrix2:
    """M[i,j] = sum_{k,l} a4[i,j,k,l] y_k x_l."""
    y, x = _as_vector(y), _as_vector(x)
    cells = []
    for i, j in itertools.product((0, 1), repeat=2):
        total = Fraction(0)
        for k, l in itertools.product((0, 1), repeat=2):
            total += a4[i, j, k, l] * y[k] * x[l]
        cells.append(total)
    return Matrix2(*cells)


def apply_sl2(a: AnyHypermatrix, slot: int, g: Matrix2) -> AnyHypermatrix:
    """Act on index ``slot`` by ``g``: a'[..., p, ...] = sum_i g[p, i] a[..., i, ...].

    Only unimodular ``g`` is accepted; that is what keeps every invariant in
    this package exactly unchanged.
    """
    if not 0 <= slot < a.order:
        raise IndexError(f"slot {slot} out of range for order {a.order}")
    if not isinstance(g, Matrix2):
        g = Matrix2.of(*g)
    if g.det() != 1:
        raise NonUnimodular(f"det(g) = {format_rational(g.det())}, expected 1")

    def entry(*idx):
        total = Fraction(0)
        for i in (0, 1):
            src = list(idx)
            src[slot] = i
            total += g[idx[slot], i] * a[tuple(src)]
        return total

    return type(a).from_function(entry)


def permute_axes(a: AnyHypermatrix, perm: Sequence[int]) -> AnyHypermatrix:
    """Move axis ``n`` to position ``perm[n]``, i.e. a'[sigma(idx)] = a[idx]."""
    perm = tuple(perm)
    if sorted(perm) != list(range(a.order)):
        raise ValueError(f"{perm!r} is not a permutation of {a.order} axes")
    out = [Fraction(0)] * len(a.entries)
    probe = type(a).zeros()
    for idx in a.indices():
        new = [0] * a.order
        for n, i in enumerate(idx):
            new[perm[n]] = i
        out[probe._flat(tuple(new))] = a[idx]
    return type(a)(out)


def hypermatrix_to_json(a: AnyHypermatrix) -> dict:
    entries = []
    for v in a.entries:
        entries.append(v.numerator if v.denominator == 1 else format_rational(v))
    return {"shape": list(a.shape), "entries": entries}


def hypermatrix_from_json(data: Union[str, dict]) -> AnyHypermatrix:
    """Parse ``{"shape": [2,2,2(,2)], "entries": [...]}``; entries are ints or "p/q"."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "shape" not in data or "entries" not in data:
        raise ValueError("hypermatrix JSON needs 'shape' and 'entries'")
    shape = list(data["shape"])
    if shape == [2, 2, 2]:
        cls = Hypermatrix222
    elif shape == [2, 2, 2, 2]:
        cls = Hypermatrix2222
    else:
        raise ValueError(f"unsupported shape {shape!r}")
    entries = data["entries"]
    for v in entries:
        if isinstance(v, float) or isinstance(v, bool):
            raise ValueError(f"entry {v!r} is not an integer or 'p/q' string")
    return cls(entries)
