"""Command-line front-end with deterministic JSON/CSV output.

Scalar verbs print one JSON object {"value": ..., "meta": {...}} on stdout;
curve verbs (geodesic, circle, mesh) print CSV with a header row.  Numbers
carry 15 significant digits, so fixed inputs produce byte-identical output.
Validation problems exit 2 with an error JSON on stderr; numerical failures
(quadrature, root finding) exit 1.

Quadrature settings resolve as: command-line flags, then environment
variables BM3_ABS_TOL / BM3_REL_TOL / BM3_MAX_DEPTH, then built-in defaults.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Any, Sequence

from .algebra import Poly3, norm
from .bingles import invariants, invariants_raw, reciprocal_bingle
from .bispace import biproject
from .errors import BM3Error
from .formatting import format_number, render_csv, render_json
from .geodesics import Geodesic, UnitPoint, geodesic_eval, q2_principal, unit_circle_point
from .quadrature import QuadratureCfg
from .relative import cfh, psi
from .selftest import DEFAULT_SEED, run_selftest
from .tringles import tringle

#: Compactification factor: tanh(k * x) with k chosen so 1 maps to 1/2.
COMPACTIFY_K = math.log(3.0) / 2.0


def compactify(x: float) -> float:
    """Map a coordinate into the unit cube: tanh(x * ln(3)/2)."""
    return math.tanh(x * COMPACTIFY_K)


def _env_float(name: str) -> float | None:
    raw = os.environ.get(name)
    return float(raw) if raw not in (None, "") else None


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    return int(raw) if raw not in (None, "") else None


def resolve_cfg(args: argparse.Namespace) -> QuadratureCfg:
    """Quadrature config with precedence flags > environment > defaults."""
    default = QuadratureCfg()
    abs_tol = args.abs_tol if args.abs_tol is not None else _env_float("BM3_ABS_TOL")
    rel_tol = args.rel_tol if args.rel_tol is not None else _env_float("BM3_REL_TOL")
    max_depth = args.max_depth if args.max_depth is not None else _env_int("BM3_MAX_DEPTH")
    return QuadratureCfg(
        abs_tol=abs_tol if abs_tol is not None else default.abs_tol,
        rel_tol=rel_tol if rel_tol is not None else default.rel_tol,
        max_depth=max_depth if max_depth is not None else default.max_depth,
    )


def _poly(values: Sequence[float]) -> Poly3:
    return Poly3(values[0], values[1], values[2])


def _emit_scalar(value: Any, meta: dict[str, Any]) -> None:
    sys.stdout.write(render_json({"value": value, "meta": meta}) + "\n")


def _unit_point_from(values: Sequence[float]) -> UnitPoint:
    x1, x2, x3 = values
    p = x1 * x2 * x3
    if p <= 0.0:
        raise BM3Error(f"base point must be first-octant, got {tuple(values)}")
    n = p ** (1.0 / 3.0)
    return UnitPoint(x1 / n, x2 / n, x3 / n)


def _cmd_norm(args: argparse.Namespace) -> int:
    a = _poly(args.components)
    _emit_scalar(norm(a), {"verb": "norm", "inputs": list(args.components)})
    return 0


def _cmd_biproject(args: argparse.Namespace) -> int:
    u = biproject(_poly(args.components))
    _emit_scalar(list(u), {"verb": "biproject", "inputs": list(args.components)})
    return 0


def _cmd_bingle(args: argparse.Namespace) -> int:
    a, b = _poly(args.components[:3]), _poly(args.components[3:])
    _emit_scalar(
        reciprocal_bingle(a, b), {"verb": "bingle", "inputs": list(args.components)}
    )
    return 0


def _cmd_psi(args: argparse.Namespace) -> int:
    a, b = _poly(args.components[:3]), _poly(args.components[3:])
    result = psi(a, b, resolve_cfg(args))
    _emit_scalar(
        result.value,
        {
            "verb": "psi",
            "inputs": list(args.components),
            "component": result.component,
        },
    )
    return 0


def _cmd_cfh(args: argparse.Namespace) -> int:
    value = cfh(args.value, resolve_cfg(args), branch=args.branch)
    _emit_scalar(
        value, {"verb": "cfh", "inputs": [args.value], "branch": args.branch}
    )
    return 0


def _cmd_invariants(args: argparse.Namespace) -> int:
    a, b = _poly(args.components[:3]), _poly(args.components[3:])
    inv = invariants(a, b)
    r1, r2, r3 = invariants_raw(a, b)
    _emit_scalar(
        {"i1": inv.i1, "i2": inv.i2, "i3": inv.i3},
        {
            "verb": "invariants",
            "inputs": list(args.components),
            "raw": {"r1": r1, "r2": r2, "norm_ratio": r3},
        },
    )
    return 0


def _cmd_tringle(args: argparse.Namespace) -> int:
    a = _poly(args.components[:3])
    b = _poly(args.components[3:6])
    c = _poly(args.components[6:])
    _emit_scalar(tringle(a, b, c), {"verb": "tringle", "inputs": list(args.components)})
    return 0


def sample_geodesic(
    base: UnitPoint,
    q1: float,
    s_from: float,
    s_to: float,
    n: int,
    compact: bool,
) -> list[tuple[float, float, float, float]]:
    """Sample n points of the extremal with exponent q1 through base.

    Row format (s, x1, x2, x3); endpoints land exactly on the range bounds.
    With compact=True the coordinates are mapped through compactify().
    """
    if n < 2:
        raise BM3Error(f"need at least 2 samples, got {n}")
    g = Geodesic(base.x1, base.x2, q1, q2_principal(q1))
    rows = []
    for i in range(n):
        s = s_from + (s_to - s_from) * i / (n - 1)
        s = s_to if i == n - 1 else s
        p = geodesic_eval(g, s)
        x = tuple(map(compactify, p)) if compact else p.as_tuple()
        rows.append((s, x[0], x[1], x[2]))
    return rows


def _cmd_geodesic(args: argparse.Namespace) -> int:
    base = _unit_point_from(args.base)
    rows = sample_geodesic(base, args.q1, args.s_from, args.s_to, args.samples, args.compactify)
    sys.stdout.write(render_csv(("s", "x1", "x2", "x3"), rows))
    return 0


def _cmd_circle(args: argparse.Namespace) -> int:
    if args.samples < 2:
        raise BM3Error(f"need at least 2 samples, got {args.samples}")
    if args.q1_from <= 0.0 or args.q1_to <= 0.0:
        raise BM3Error("q1 range must be strictly positive")
    sign = 1 if args.sign == "+" else -1
    rows = []
    for i in range(args.samples):
        q1 = args.q1_from + (args.q1_to - args.q1_from) * i / (args.samples - 1)
        q1 = args.q1_to if i == args.samples - 1 else q1
        p = unit_circle_point(q1, sign, args.chart)
        x = tuple(map(compactify, p)) if args.compactify else p.as_tuple()
        rows.append((q1, x[0], x[1], x[2]))
    sys.stdout.write(render_csv(("q1", "x1", "x2", "x3"), rows))
    return 0


def _cmd_mesh(args: argparse.Namespace) -> int:
    n = args.samples
    if n < 2:
        raise BM3Error(f"need at least 2 samples per axis, got {n}")
    grid = [args.u_min + (args.u_max - args.u_min) * i / (n - 1) for i in range(n)]
    grid[-1] = args.u_max

    def vertex(i: int, j: int) -> tuple[float, float, float, float, float]:
        u1, u2 = grid[i], grid[j]
        x1, x2, x3 = math.exp(u1), math.exp(u2), math.exp(-u1 - u2)
        if args.compactify:
            x1, x2, x3 = compactify(x1), compactify(x2), compactify(x3)
        return (u1, u2, x1, x2, x3)

    rows = []
    for i in range(n - 1):
        k = 0
        for j in range(n):
            rows.append((i, k) + vertex(i, j))
            rows.append((i, k + 1) + vertex(i + 1, j))
            k += 2
    sys.stdout.write(render_csv(("strip", "vertex", "u1", "u2", "x1", "x2", "x3"), rows))
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    report = run_selftest(seed=args.seed)
    sys.stdout.write(render_json(report) + "\n")
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bm3",
        description="Cubic three-dimensional geometry toolkit: norms, angles, areas.",
    )
    parser.add_argument("--abs-tol", type=float, default=None, help="quadrature absolute tolerance")
    parser.add_argument("--rel-tol", type=float, default=None, help="quadrature relative tolerance")
    parser.add_argument("--max-depth", type=int, default=None, help="quadrature bisection depth limit")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("norm", help="cubic norm of a triple")
    p.add_argument("components", nargs=3, type=float)
    p.set_defaults(fn=_cmd_norm)

    p = sub.add_parser("biproject", help="exponential angles of a first-octant triple")
    p.add_argument("components", nargs=3, type=float)
    p.set_defaults(fn=_cmd_biproject)

    p = sub.add_parser("bingle", help="reciprocal bingle of two triples (a then b)")
    p.add_argument("components", nargs=6, type=float)
    p.set_defaults(fn=_cmd_bingle)

    p = sub.add_parser("psi", help="relative bingle of two triples with component label")
    p.add_argument("components", nargs=6, type=float)
    p.set_defaults(fn=_cmd_psi)

    p = sub.add_parser("cfh", help="inverse of the circle-arclength function")
    p.add_argument("value", type=float)
    p.add_argument("--branch", choices=("upper", "lower"), default="upper")
    p.set_defaults(fn=_cmd_cfh)

    p = sub.add_parser("invariants", help="pair invariants (both labeling conventions)")
    p.add_argument("components", nargs=6, type=float)
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("tringle", help="area of the geodesic triangle of three triples")
    p.add_argument("components", nargs=9, type=float)
    p.set_defaults(fn=_cmd_tringle)

    p = sub.add_parser("geodesic", help="sample an extremal to CSV")
    p.add_argument("base", nargs=3, type=float, help="first-octant base point (normalized)")
    p.add_argument("q1", type=float, help="first exponent (principal branch)")
    p.add_argument("--s-from", type=float, default=0.0)
    p.add_argument("--s-to", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--compactify", action="store_true")
    p.set_defaults(fn=_cmd_geodesic)

    p = sub.add_parser("circle", help="sample a unit-circle component to CSV")
    p.add_argument("q1_from", type=float)
    p.add_argument("q1_to", type=float)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p.add_argument("--chart", choices=("12", "13", "23"), default="12")
    p.add_argument("--compactify", action="store_true")
    p.set_defaults(fn=_cmd_circle)

    p = sub.add_parser("mesh", help="triangle-strip mesh of the unit surface to CSV")
    p.add_argument("--u-min", type=float, default=-1.5)
    p.add_argument("--u-max", type=float, default=1.5)
    p.add_argument("--samples", type=int, default=16)
    p.add_argument("--compactify", action="store_true")
    p.set_defaults(fn=_cmd_mesh)

    p = sub.add_parser("selftest", help="run every invariant suite, report JSON")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code not in (0, None):  # argparse already printed usage
            sys.stderr.write(
                render_json({"error": {"type": "ArgumentError", "message": "invalid arguments"}})
                + "\n"
            )
            return 2
        return 0
    try:
        return args.fn(args)
    except BM3Error as exc:
        sys.stderr.write(
            render_json({"error": {"type": type(exc).__name__, "message": str(exc)}})
            + "\n"
        )
        return exc.exit_code
    except ValueError as exc:
        sys.stderr.write(
            render_json({"error": {"type": "ValueError", "message": str(exc)}}) + "\n"
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
