"""Exact rational helpers shared by every module.

All arithmetic is done with :class:`fractions.Fraction`; floats are rejected
at the boundary so nothing inexact leaks in.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational as _RationalABC
from typing import Iterable, Optional, Union

RationalLike = Union[int, Fraction, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(r: Fraction) -> str:
    r = as_rational(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def rational_sqrt(r: RationalLike) -> Optional[Fraction]:
    """Nonnegative square root of ``r`` if it is a rational square, else None."""
    r = as_rational(r)
    if r < 0:
        return None
    num, den = r.numerator, r.denominator
    sn, sd = isqrt(num), isqrt(den)
    if sn * sn != num or sd * sd != den:
        return None
    return Fraction(sn, sd)


def primitive_integer_vector(values: Iterable[RationalLike]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry positive."""
    vals = [as_rational(v) for v in values]
    if all(v == 0 for v in vals):
        raise ValueError("zero vector has no projective representative")
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = 0
    for n in ints:
        g = gcd(g, n)
    ints = [n // g for n in ints]
    lead = next(n for n in ints if n != 0)
    if lead < 0:
        ints = [-n for n in ints]
    return tuple(ints)
