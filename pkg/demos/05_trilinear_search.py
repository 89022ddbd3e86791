"""
Searching a trilinear system
============================

Plant a solution, reduce the system to a quartic, search a box of
projective x values and move the quartic to a cubic model.
"""
from fractions import Fraction

from hyperbridge import plant_solution, quartic_to_cubic, reduce_to_quartic, search_solutions
from hyperbridge.elliptic import cubic_to_weierstrass, weierstrass_j
from hyperbridge.trilinear import is_rational_square

system = plant_solution((1, 2), (3, -1), (2, 1), seed=3)
report = search_solutions(system, bound=4)
for sol in report.solutions:
    print(sol.to_json())

# %%
# x = 1/2 is a rational point of w^2 = Q(x, 1) since the planted x is (1, 2).
q = reduce_to_quartic(system)
x0 = next(sol.x for sol in report.solutions if tuple(sol.x) == (1, 2))
x = Fraction(x0[0], x0[1])
w = is_rational_square(q(x, 1))
red = quartic_to_cubic(q, (x, w))
print(red.kind, red.curve)
print("j =", weierstrass_j(cubic_to_weierstrass(red.curve)[0]))
