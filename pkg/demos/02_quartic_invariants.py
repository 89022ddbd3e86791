"""
Quartic invariants of a 2x2x2x2 hypermatrix
===========================================

Contracting a 2x2x2x2 hypermatrix with (x, y) gives a 2x2x2 cube whose
hyperdeterminant is a binary quartic.  Its invariants S, T and delta
do not see unimodular changes of any slot.
"""
import random

from hyperbridge import (
    BinaryQuartic,
    Hypermatrix2222,
    has_repeated_root,
    j_invariant,
    quartic_from_hypermatrix,
    quartic_invariants,
)
from hyperbridge.selftest import random_unimodular
from hyperbridge import apply_sl2

rng = random.Random(11)
a4 = Hypermatrix2222([rng.randint(-3, 3) for _ in range(16)])
q = quartic_from_hypermatrix(a4)
inv = quartic_invariants(q)
print(q.to_json())
print("S =", inv.S, " T =", inv.T, " delta =", inv.delta)

# %%
moved = a4
for slot in range(4):
    moved = apply_sl2(moved, slot, random_unimodular(rng))
print("after SL2 moves:", quartic_invariants(quartic_from_hypermatrix(moved)) == inv)

# %%
# delta vanishes exactly when the quartic has a repeated root.
square = BinaryQuartic.of([1, 0, -2, 0, 1])  # (x^2 - y^2)^2
print(quartic_invariants(square).delta, has_repeated_root(square))
if inv.delta != 0:
    print("J =", j_invariant(q))
