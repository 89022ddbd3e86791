"""Exact bridge between elliptic curves over Q and 2x2x2 / 2x2x2x2 hyperdeterminants."""
from .errors import HyperbridgeError
from .hypermatrix import (
    Hypermatrix222,
    Hypermatrix2222,
    Matrix2,
    Vector2,
    apply_sl2,
    contract_last,
    contract_to_matrix,
    hypermatrix_from_json,
    hypermatrix_to_json,
    permute_axes,
)
from .invariants import (
    BinaryQuartic,
    QuarticInvariants,
    cayley_det,
    has_repeated_root,
    j_invariant,
    quartic_from_hypermatrix,
    quartic_invariants,
    schlafli_delta,
)
from .elliptic import (
    CubicCurve,
    CurvePoint,
    FactoredCurve,
    WeierstrassCurve,
    add_points,
    cubic_to_weierstrass,
    has_full_two_torsion,
    is_torsion,
    multiply,
    negate,
    shift_to_origin,
    two_torsion,
    weierstrass_j,
)
from .bridge import (
    BridgeParams,
    CubeAssignment,
    UVCurve,
    cubic_to_uv,
    derive_cube_assignment,
    factored_to_params,
    params_to_uv,
    point_map_uv,
    uv_to_cubic,
)
from .trilinear import (
    SearchReport,
    TrilinearSolution,
    TrilinearSystem,
    is_rational_square,
    plant_solution,
    quartic_to_cubic,
    reduce_to_quartic,
    search_solutions,
    solve_given_x,
    verify_solution,
)

__version__ = "0.1.0"
