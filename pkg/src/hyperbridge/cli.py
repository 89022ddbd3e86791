"""``hyperbridge`` command line.

Every command prints one JSON document on stdout and exits 0.  Domain errors
exit 1 with ``{"error": <kind>, "message": ...}`` on stderr; usage errors
(bad flags, malformed or wrongly shaped input) exit 2.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from ._rational import as_rational, format_rational
from .bridge import BridgeParams, assignment_reproduces, params_to_uv, uv_to_cubic
from .elliptic import (
    CubicCurve,
    WeierstrassCurve,
    add_points,
    cubic_to_weierstrass,
    parse_point,
    point_to_json,
    shift_to_origin,
    two_torsion,
    weierstrass_j,
)
from .errors import HyperbridgeError
from .hypermatrix import Hypermatrix222, Hypermatrix2222, hypermatrix_from_json
from .invariants import cayley_det, quartic_from_hypermatrix, quartic_invariants
from .selftest import run_selftest
from .trilinear import TrilinearSystem, plant_solution, search_solutions


class UsageError(Exception):
    pass


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _read_hypermatrix(path: str, cls):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        hm = hypermatrix_from_json(text)
    except (OSError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot read hypermatrix from {path}: {exc}") from exc
    if not isinstance(hm, cls):
        raise UsageError(f"expected shape {list((2,) * cls.order)}, got {list(hm.shape)}")
    return hm


def _cubic_arg(text: str) -> CubicCurve:
    parts = [as_rational(p) for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError("--cubic takes a,b,c,d")
    return CubicCurve(*parts)


def _vec_arg(text: str) -> tuple[int, int]:
    parts = [int(p) for p in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"vector {text!r} needs two integers")
    return parts[0], parts[1]


def cmd_cayley_det(args) -> dict:
    hm = _read_hypermatrix(args.file, Hypermatrix222)
    return {"cayley_det": format_rational(cayley_det(hm))}


def cmd_invariants(args) -> dict:
    a4 = _read_hypermatrix(args.file, Hypermatrix2222)
    q = quartic_from_hypermatrix(a4)
    inv = quartic_invariants(q)
    return {
        "quartic": q.to_json(),
        "S": format_rational(inv.S),
        "T": format_rational(inv.T),
        "delta": format_rational(inv.delta),
        "I": format_rational(inv.I),
        "Jcov": format_rational(inv.Jcov),
        "J": None if inv.delta == 0 else format_rational(inv.S**3 / inv.delta),
    }


def cmd_bridge(args) -> dict:
    bp = BridgeParams(args.k, args.m, args.p, args.r, args.s, args.t)
    uv = params_to_uv(bp)
    return {
        "params": bp.to_json(),
        "uv": uv.to_json(),
        "cubic": uv_to_cubic(uv).to_json(),
        "assignment_verified": assignment_reproduces(bp),
    }


def _weierstrass(args) -> WeierstrassCurve:
    if args.alpha is None or args.beta is None:
        raise UsageError("this subcommand needs --alpha and --beta")
    return WeierstrassCurve(args.alpha, args.beta)


def cmd_curve(args) -> dict:
    op = args.op
    args.points = list(args.points) + list(args.extra_points)
    if op in ("add", "double"):
        curve = _weierstrass(args)
        need = 2 if op == "add" else 1
        if len(args.points) != need:
            raise UsageError(f"{op} takes {need} point(s)")
        pts = [parse_point(curve, p) for p in args.points]
        result = add_points(curve, pts[0], pts[-1])
        return {"curve": curve.to_json(), "result": point_to_json(result)}
    if op == "torsion":
        cubic = args.cubic or (
            CubicCurve(1, 0, _weierstrass(args).alpha, _weierstrass(args).beta)
        )
        pts = two_torsion(cubic)
        return {"curve": cubic.to_json(), "two_torsion": [point_to_json(P) for P in pts],
                "full": len(pts) == 3}
    if op == "shift":
        if args.cubic is None or len(args.points) != 1:
            raise UsageError("shift needs --cubic and one point")
        P = parse_point(args.cubic, args.points[0])
        return {"curve": shift_to_origin(args.cubic, P).to_json()}
    if op == "j":
        if args.cubic is not None:
            curve, _ = cubic_to_weierstrass(args.cubic)
        else:
            curve = _weierstrass(args)
        return {"curve": curve.to_json(), "j": format_rational(weierstrass_j(curve))}
    raise UsageError(f"unknown curve operation {op!r}")


def cmd_trilinear(args) -> dict:
    planted = None
    if args.plant:
        try:
            x, y, z = (_vec_arg(part) for part in args.plant.split(";"))
        except ValueError as exc:
            raise UsageError(f"--plant wants 'x0,x1;y0,y1;z0,z1': {exc}") from exc
        system = plant_solution(x, y, z, args.seed)
        planted = {"x": list(x), "y": list(y), "z": list(z), "seed": args.seed}
    elif args.file:
        try:
            system = TrilinearSystem(_read_hypermatrix(args.file, Hypermatrix2222))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        raise UsageError("give a hypermatrix FILE or --plant")
    report = search_solutions(system, args.bound, workers=args.workers)
    out = report.to_json()
    out["entries"] = [int(v) for v in system.a4.entries]
    out["planted"] = planted
    return out


def cmd_selftest(args) -> dict:
    return run_selftest(args.iterations, args.seed, inject_fault=args.inject_fault)


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise ValueError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperbridge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cayley-det", help="Cayley hyperdeterminant of a 2x2x2 hypermatrix")
    p.add_argument("file", help="hypermatrix JSON, '-' for stdin")
    p.set_defaults(func=cmd_cayley_det)

    p = sub.add_parser("invariants", help="quartic, S, T, delta, J of a 2x2x2x2 hypermatrix")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("bridge", help="uv-form and cubic from (k, m, p, r, s, t)")
    for name in "kmprst":
        p.add_argument(f"-{name}", type=as_rational, required=True)
    p.set_defaults(func=cmd_bridge)

    p = sub.add_parser("curve", help="group law and 2-torsion on rational elliptic curves")
    p.add_argument("op", choices=["add", "double", "torsion", "shift", "j"])
    p.add_argument("points", nargs="*", help="points as 'x,y', '(x,y)' or 'O', right after OP")
    p.add_argument("-P", "--point", dest="extra_points", action="append", default=[],
                   help="a point; repeatable, may follow other options")
    p.add_argument("--alpha", type=as_rational)
    p.add_argument("--beta", type=as_rational)
    p.add_argument("--cubic", type=_cubic_arg, help="a,b,c,d for y^2 = ax^3+bx^2+cx+d")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("trilinear", help="bounded search for rational solutions")
    p.add_argument("file", nargs="?")
    p.add_argument("--bound", type=_positive, required=True)
    p.add_argument("--plant", help="'x0,x1;y0,y1;z0,z1' planted solution")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_trilinear)

    p = sub.add_parser("selftest", help="run the randomized property suites")
    p.add_argument("--iterations", type=_positive, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        json.dump({"error": "UsageError", "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except HyperbridgeError as exc:
        json.dump({"error": exc.kind, "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 1
    _emit(payload)
    if args.command == "selftest" and not payload["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
