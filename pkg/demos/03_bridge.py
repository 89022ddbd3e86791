"""
From a curve with full 2-torsion to a hyperdeterminant
======================================================

Six parameters give a factored cubic, its expanded form and a uv-form.
The uv-form is the hyperdeterminant of a cube built from the parameters
and the two coordinates u, v.
"""
from hyperbridge import BridgeParams, derive_cube_assignment, params_to_uv, uv_to_cubic
from hyperbridge.bridge import assignment_reproduces, params_to_factored

bp = BridgeParams(1, 2, 3, 1, 1, 1)
uv = params_to_uv(bp)
print(params_to_factored(bp))
print(uv_to_cubic(uv))
print(uv.to_json())

# %%
# Which symbol sits on which corner?
assignment = derive_cube_assignment()
print(dict(zip("abcdefgh", assignment.corners())), "sign", assignment.sign)
print("reproduces uv-form:", assignment_reproduces(bp))
