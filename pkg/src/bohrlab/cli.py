"""Command-line front end: radii, verification, sweeps, areas, figure data.

Every command emits deterministic output for fixed flags; CSV uses '.' decimals
and 17 significant digits so values round-trip.  Exit codes: 0 success,
1 inequality/registry mismatch, 2 invalid flags.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Sequence

from . import extremal as ext
from . import series as ser
from . import solver
from .geometry import circle_rows

FLOAT_FMT = "{:.17g}"


def _fmt(x: float) -> str:
    return FLOAT_FMT.format(float(x))


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence], out) -> None:
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row) + "\n")


def _parse_float_list(text: str) -> List[float]:
    return [float(t) for t in text.split(",") if t.strip()]


class CliError(Exception):
    pass


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise CliError(message)


def cmd_radius(args) -> int:
    _check(args.variant in solver.REGISTRY, f"unknown variant {args.variant!r}")
    _check(0.0 <= args.gamma < 1.0, "gamma must lie in [0, 1)")
    _check(0.0 <= args.k <= 1.0, "k must lie in [0, 1]")
    result = solver.critical_radius(args.variant, args.gamma, args.k, tol=args.tol)
    if args.format == "json":
        print(json.dumps(result.to_dict(), sort_keys=True))
    else:
        _emit_csv(
            ["variant", "gamma", "k", "rho_star", "reference", "abs_err", "iterations"],
            [[result.variant, result.gamma, result.k, result.rho_star,
              result.reference, result.abs_err, result.iterations]],
            sys.stdout,
        )
    return 0 if result.abs_err <= max(args.tol, 1e-6) else 1


def cmd_verify(args) -> int:
    _check(args.variant in solver.REGISTRY, f"unknown variant {args.variant!r}")
    _check(0.0 < args.rho < 1.0, "rho must lie in (0, 1)")
    _check(0.0 <= args.gamma < 1.0, "gamma must lie in [0, 1)")
    _check(0.0 <= args.k <= 1.0, "k must lie in [0, 1]")
    _check(args.a_grid >= 3, "a-grid must be >= 3")
    rho0 = solver.reference_radius(args.variant, args.gamma, args.k)
    max_lhs = -1.0
    max_a = 0.0
    for i in range(args.a_grid):
        a = i * solver.A_CAP / (args.a_grid - 1)
        lhs = ext.closed_form_lhs(args.variant, a, args.rho, args.gamma, args.k)
        if lhs > max_lhs:
            max_lhs, max_a = lhs, a
    # refine around the grid max so near-threshold violations are not missed
    sup = solver.sup_over_family(
        args.variant, args.rho, args.gamma, args.k, n_grid=args.a_grid
    )
    if sup > max_lhs:
        max_lhs = sup
    should_hold = args.rho <= rho0
    holds = max_lhs <= 1.0 + solver.VIOLATION_DELTA
    status = "pass" if holds == should_hold else "fail"
    print(
        f"variant={args.variant} rho={_fmt(args.rho)} rho0={_fmt(rho0)} "
        f"max_lhs={_fmt(max_lhs)} at a={_fmt(max_a)} expected_hold={should_hold} "
        f"holds={holds} -> {status}"
    )
    if should_hold and not holds:
        return 1
    if not should_hold and holds:
        print(f"warning: no violation found on grid at rho={_fmt(args.rho)} > rho0")
        return 1
    return 0


def cmd_sweep(args) -> int:
    _check(args.variant in solver.REGISTRY, f"unknown variant {args.variant!r}")
    _check(args.steps >= 2, "steps must be >= 2")
    _check(0.0 < args.rho_min < args.rho_max < 1.0, "need 0 < rho-min < rho-max < 1")
    rows = []
    for i in range(args.steps):
        rho = args.rho_min + i * (args.rho_max - args.rho_min) / (args.steps - 1)
        sup = solver.sup_over_family(args.variant, rho, args.gamma, args.k)
        rows.append([args.variant, args.gamma, args.k, rho, sup, 1.0 - sup])
    _emit_csv(["variant", "gamma", "k", "rho", "sup_lhs", "margin"], rows, sys.stdout)
    return 0


def cmd_extremal(args) -> int:
    _check(args.variant in solver.REGISTRY, f"unknown variant {args.variant!r}")
    _check(0.0 <= args.a < 1.0, "a must lie in [0, 1)")
    _check(args.steps >= 2, "steps must be >= 2")
    rows = []
    for i in range(args.steps):
        rho = args.rho_min + i * (args.rho_max - args.rho_min) / (args.steps - 1)
        lhs = ext.closed_form_lhs(args.variant, args.a, rho, args.gamma, args.k)
        rows.append([args.variant, args.a, args.gamma, args.k, rho, lhs])
    _emit_csv(["variant", "a", "gamma", "k", "rho", "lhs"], rows, sys.stdout)
    return 0


def cmd_area(args) -> int:
    _check(0.0 < args.a < 1.0, "a must lie in (0, 1)")
    _check(0.0 < args.rho < 1.0, "rho must lie in (0, 1)")
    _check(args.grid >= 64, "grid must be >= 64")
    s = ser.extremal_series(args.gamma, args.a)
    coeff = ser.area_analytic(s, args.rho)
    quad = ser.area_quadrature(s, args.rho, args.grid)
    _emit_csv(
        ["a", "gamma", "rho", "grid", "area_coefficient", "area_quadrature", "difference"],
        [[args.a, args.gamma, args.rho, args.grid, coeff.value, quad,
          abs(coeff.value - quad)]],
        sys.stdout,
    )
    return 0


def cmd_figure(args) -> int:
    gammas = _parse_float_list(args.gammas)
    _check(bool(gammas), "no gamma values given")
    _check(all(0.0 <= g < 1.0 for g in gammas), "gammas must lie in [0, 1)")
    _check(args.n >= 2, "n must be >= 2")
    _emit_csv(["gamma", "index", "re", "im"], circle_rows(gammas, args.n), sys.stdout)
    return 0


def cmd_sharpk(args) -> int:
    _check(args.variant in ("T3", "T4"), "sharpk supports variants T3 and T4")
    _check(0.0 <= args.gamma < 1.0, "gamma must lie in [0, 1)")
    _check(0.0 <= args.k <= 1.0, "k must lie in [0, 1]")
    if args.variant == "T4":
        report = solver.t4_constant_report(args.gamma, args.k, tol=args.tol)
        print(json.dumps(report, sort_keys=True))
    else:
        value = solver.sharpest_K("T3", args.gamma, args.k, tol=args.tol)
        print(json.dumps({
            "variant": "T3",
            "gamma": args.gamma,
            "k": args.k,
            "empirical_K": value,
            "closed_form": ext.t3_constant(args.k),
        }, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bohrlab",
        description="Numerical laboratory for sharp Bohr-type inequalities on shifted disks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, k=True, gamma=True):
        if gamma:
            p.add_argument("--gamma", type=float, default=0.0)
        if k:
            p.add_argument("--k", type=float, default=0.0)

    p = sub.add_parser("radius", help="compute a critical radius and compare to the registry")
    p.add_argument("--variant", required=True)
    common(p)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(fn=cmd_radius)

    p = sub.add_parser("verify", help="check an inequality over the extremal family at one rho")
    p.add_argument("--variant", required=True)
    common(p)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--a-grid", dest="a_grid", type=int, default=129)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sweep", help="CSV sweep of the family supremum over rho")
    p.add_argument("--variant", required=True)
    common(p)
    p.add_argument("--rho-min", dest="rho_min", type=float, default=0.05)
    p.add_argument("--rho-max", dest="rho_max", type=float, default=0.45)
    p.add_argument("--steps", type=int, default=41)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("extremal", help="CSV curve of the closed-form lhs for one family member")
    p.add_argument("--variant", required=True)
    p.add_argument("--a", type=float, required=True)
    common(p)
    p.add_argument("--rho-min", dest="rho_min", type=float, default=0.05)
    p.add_argument("--rho-max", dest="rho_max", type=float, default=0.45)
    p.add_argument("--steps", type=int, default=41)
    p.set_defaults(fn=cmd_extremal)

    p = sub.add_parser("area", help="compare coefficient-sum area against quadrature")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--grid", type=int, default=512)
    p.set_defaults(fn=cmd_area)

    p = sub.add_parser("figure", help="emit boundary-circle data as CSV")
    p.add_argument("--gammas", default="0,0.2,0.4,0.5,0.7")
    p.add_argument("--n", type=int, default=256)
    p.set_defaults(fn=cmd_figure)

    p = sub.add_parser("sharpk", help="empirical sharp area-constant probe")
    p.add_argument("--variant", required=True)
    common(p)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(fn=cmd_sharpk)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
