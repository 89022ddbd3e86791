"""
Rational points on y^2 = x^3 - 25x
==================================

Chord-and-tangent addition, 2-torsion and the j-invariant.
"""
from hyperbridge import CubicCurve, WeierstrassCurve, add_points, is_torsion, multiply, two_torsion, weierstrass_j

E = WeierstrassCurve(-25, 0)
P = E.point(-4, 6)
print("2P =", add_points(E, P, P))
print("3P =", multiply(E, 3, P))

# %%
# 2-torsion is read off the cubic model y^2 = x^3 - 25x
print("2-torsion x:", [T.x for T in two_torsion(CubicCurve(1, 0, -25, 0))])
print("P torsion?", is_torsion(E, P))
print("j =", weierstrass_j(E))
