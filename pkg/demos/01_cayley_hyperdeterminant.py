"""
The 2x2x2 hyperdeterminant
==========================

A cube of eight numbers, its Cayley hyperdeterminant, and what happens
when the cube is moved by unimodular matrices.
"""
import random

from hyperbridge import Hypermatrix222, Matrix2, apply_sl2, cayley_det

# corners a..h in lexicographic order, last index fastest
cube = Hypermatrix222.from_corners(1, 0, 0, 2, 0, 3, 1, 1)
print(cube.corners())
print("det =", cayley_det(cube))

# %%
# The W-state a001 + a010 + a100 is singular: its determinant vanishes.
w_state = Hypermatrix222.from_function(lambda i, j, k: int(i + j + k == 1))
print("W-state det =", cayley_det(w_state))

# %%
# Acting on any slot with a det-1 matrix leaves the determinant alone.
rng = random.Random(7)
moved = cube
for slot in range(3):
    g = Matrix2.of(1, rng.randint(-3, 3), 0, 1)
    moved = apply_sl2(moved, slot, g)
print(moved.corners(), cayley_det(moved))
