"""Randomized property suites behind ``hyperbridge selftest``.

Each suite runs ``iterations`` seeded trials and counts passes and failures.
``inject_fault`` deliberately corrupts one computation so the harness can be
shown to fail loudly.
"""
from __future__ import annotations

import random

from .bridge import BridgeParams, cubic_to_uv, params_to_factored, params_to_uv, uv_to_cubic
from .elliptic import WeierstrassCurve, add_points, multiply
from .hypermatrix import Hypermatrix2222, Matrix2, apply_sl2, permute_axes
from .invariants import BinaryQuartic, has_repeated_root, quartic_from_hypermatrix, quartic_invariants

__all__ = ["random_unimodular", "random_hypermatrix2222", "run_selftest", "SUITES"]


def random_unimodular(rng: random.Random, steps: int = 3, spread: int = 3) -> Matrix2:
    """A product of random elementary shears and quarter turns; det is always 1."""
    g = Matrix2.identity()
    for _ in range(steps):
        a = rng.randint(-spread, spread)
        choice = rng.randrange(3)
        if choice == 0:
            step = Matrix2.of(1, a, 0, 1)
        elif choice == 1:
            step = Matrix2.of(1, 0, a, 1)
        else:
            step = Matrix2.of(0, -1, 1, 0)
        g = g @ step
    return g


def random_hypermatrix2222(rng: random.Random, lo: int = -3, hi: int = 3) -> Hypermatrix2222:
    return Hypermatrix2222([rng.randint(lo, hi) for _ in range(16)])


def _invariants_of(a4):
    return quartic_invariants(quartic_from_hypermatrix(a4))


def _sl2_invariance(rng, inject_fault):
    a4 = random_hypermatrix2222(rng)
    before = _invariants_of(a4)
    moved = a4
    for slot in range(4):
        moved = apply_sl2(moved, slot, random_unimodular(rng))
    perm = list(range(4))
    rng.shuffle(perm)
    moved = permute_axes(moved, perm)
    after = _invariants_of(moved)
    if inject_fault:
        after = type(after)(after.S + 1, after.T, after.delta)
    return before == after


def _discriminant(rng, inject_fault):
    while True:
        q = BinaryQuartic.of([rng.randint(-9, 9) for _ in range(5)])
        if not q.is_zero():
            break
    delta = quartic_invariants(q).delta
    if inject_fault:
        delta = 0 if delta else 1
    return (delta == 0) == has_repeated_root(q)


def _bridge_roundtrip(rng, inject_fault):
    vals = [rng.choice([v for v in range(-5, 6) if v]) for _ in range(6)]
    bp = BridgeParams(*vals)
    cubic = uv_to_cubic(params_to_uv(bp))
    expected = params_to_factored(bp).to_cubic()
    if inject_fault:
        expected = type(expected)(expected.a, expected.b + 1, expected.c, expected.d)
    uv = params_to_uv(bp)
    back = cubic_to_uv(cubic)
    # the +sqrt(d) convention returns (e, g) up to a joint sign flip
    same_uv = back == uv or back == type(uv)(-uv.e, uv.f, -uv.g, uv.h)
    return cubic == expected and same_uv and uv_to_cubic(back) == cubic


_CURVE = WeierstrassCurve(-25, 0)


def _group_sample():
    P = _CURVE.point(-4, 6)
    torsion = [_CURVE.infinity(), _CURVE.point(0, 0), _CURVE.point(5, 0), _CURVE.point(-5, 0)]
    return [add_points(_CURVE, multiply(_CURVE, i, P), T) for i in range(3) for T in torsion]


def _group_law(rng, inject_fault):
    sample = _group_sample()
    A, B, C = (rng.choice(sample) for _ in range(3))
    left = add_points(_CURVE, add_points(_CURVE, A, B), C)
    right = add_points(_CURVE, A, add_points(_CURVE, B, C))
    if inject_fault:
        right = -right if not right.is_infinity and right.y != 0 else _CURVE.point(-4, 6)
    return left == right and add_points(_CURVE, A, B) == add_points(_CURVE, B, A)


SUITES = {
    "sl2_invariance": _sl2_invariance,
    "discriminant_repeated_root": _discriminant,
    "bridge_roundtrip": _bridge_roundtrip,
    "group_law": _group_law,
}


def run_selftest(iterations: int = 50, seed: int = 0, inject_fault: bool = False) -> dict:
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    summary = {"seed": seed, "iterations": iterations, "suites": {}}
    for index, (name, trial) in enumerate(SUITES.items()):
        rng = random.Random(f"{seed}:{index}")
        passed = sum(bool(trial(rng, inject_fault)) for _ in range(iterations))
        summary["suites"][name] = {"passed": passed, "failed": iterations - passed}
    summary["ok"] = all(s["failed"] == 0 for s in summary["suites"].values())
    return summary
