"""Command-line interface: verification reports, bound tables, searches.

Exit-code contract: 0 means every requested check passed, 1 means a
mathematical check failed, 2 means a usage or domain error.  All numbers
are serialized with shortest round-trip precision (`repr`), so identical
flags produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import bounds as bd
from . import optimizer as opt
from . import series as ts
from . import verification
from .errors import BihankelError
from .functionals import BiCoefficients, FamilyId, Order, verify_coefficient_system

DERIVE_TOL = 1e-10
DOMINANCE_SLACK = 1e-12


def _fmt(x: float) -> str:
    return repr(float(x))


def _complex_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _families(name: str) -> list[FamilyId]:
    if name == "both":
        return [FamilyId.STARLIKE, FamilyId.CONVEX]
    return [FamilyId(name)]


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihankel",
        description=(
            "Closed-form second-Hankel-determinant bounds for bi-starlike "
            "and bi-convex functions of order beta, with independent "
            "numerical verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    p_verify.add_argument("--family", choices=["starlike", "convex", "both"],
                          default="both")
    p_verify.add_argument("--beta", type=float, action="append",
                          help="order parameter, repeatable (default 0.0)")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=100,
                          help="random draws for the series-identity check")
    p_verify.add_argument("--samples", type=int, default=2000,
                          help="samples for the coefficient-bound spot checks")
    p_verify.add_argument("--strict", action="store_true",
                          help="escalate advisory checks to failures")
    p_verify.add_argument("--output", default=None)

    p_table = sub.add_parser("table", help="tabulate the bounds over beta")
    p_table.add_argument("--family", choices=["starlike", "convex", "both"],
                         default="both")
    p_table.add_argument("--beta-range", type=float, nargs=2, default=[0.0, 0.9],
                         metavar=("LO", "HI"))
    p_table.add_argument("--step", type=float, default=0.1)
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.add_argument("--output", default=None)

    p_search = sub.add_parser("search", help="empirical coefficient search")
    p_search.add_argument("--family", choices=["starlike", "convex"],
                          required=True)
    p_search.add_argument("--beta", type=float, default=0.0)
    p_search.add_argument("--samples", type=int, default=100000)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--boundary-fraction", type=float, default=0.25)
    p_search.add_argument("--constrain-sum", action="store_true",
                          help="experiment: impose the dropped c2+d2 relation")
    p_search.add_argument("--output", default=None)

    p_derive = sub.add_parser("derive", help="series-oracle residual report")
    p_derive.add_argument("--beta", type=float, action="append",
                          help="repeatable (default 0.0 0.3 0.7)")
    p_derive.add_argument("--trials", type=int, default=100)
    p_derive.add_argument("--seed", type=int, default=0)

    p_fs = sub.add_parser("fs-bound", help="Fekete-Szego bound for (family, beta, mu)")
    p_fs.add_argument("--family", choices=["starlike", "convex"], required=True)
    p_fs.add_argument("--beta", type=float, default=0.0)
    p_fs.add_argument("--mu", type=float, required=True)

    return parser


def cmd_verify(args) -> int:
    betas = args.beta if args.beta else [0.0]
    for beta in betas:
        if not 0.0 <= beta < 1.0:
            return _usage_error(f"beta must lie in [0, 1), got {beta}")
    if args.trials < 1 or args.samples < 1:
        return _usage_error("trials and samples must be >= 1")

    lines = []
    ok = True
    for family in _families(args.family):
        for beta in betas:
            result = bd.h22_bound(family, beta)
            lines.append(
                f"family={family.value} beta={_fmt(beta)} "
                f"bound={_fmt(result.bound)} branch={result.branch.value} "
                f"critical_c={_fmt(result.critical_c)}"
            )
            checks = verification.run_checks(
                family, beta, seed=args.seed, trials=args.trials,
                spot_samples=args.samples,
            )
            for check in checks:
                if check.passed:
                    status = "PASS"
                elif check.advisory and not args.strict:
                    status = "WARN"
                else:
                    status = "FAIL"
                lines.append(
                    f"  {status} {check.name} value={_fmt(check.value)} "
                    f"tol={_fmt(check.tolerance)}"
                )
            ok = ok and verification.all_passed(checks, strict=args.strict)
    lines.append("result: " + ("all checks passed" if ok else "checks FAILED"))
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


def _beta_grid(lo: float, hi: float, step: float) -> list[float]:
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + k * step for k in range(count)]


def cmd_table(args) -> int:
    lo, hi = args.beta_range
    if args.step <= 0.0:
        return _usage_error(f"step must be > 0, got {args.step}")
    if lo > hi:
        return _usage_error(f"empty beta range [{lo}, {hi}]")
    if not (0.0 <= lo and hi < 1.0):
        return _usage_error(f"beta range [{lo}, {hi}] not inside [0, 1)")

    rows = []
    for beta in _beta_grid(lo, hi, args.step):
        for family in _families(args.family):
            result = bd.h22_bound(family, beta)
            profile = bd.quartic_profile(family, beta)
            scan = opt.maximize_1d(profile.value, (0.0, 2.0))
            rows.append(
                {
                    "beta": beta,
                    "family": family.value,
                    "bound": result.bound,
                    "branch": result.branch.value,
                    "critical_c": result.critical_c,
                    "grid_max": scan.max_value,
                    "abs_err": abs(scan.max_value - result.bound),
                }
            )

    if args.format == "csv":
        lines = ["beta,family,bound,branch,critical_c,grid_max,abs_err"]
        for row in rows:
            lines.append(
                ",".join(
                    [
                        _fmt(row["beta"]),
                        row["family"],
                        _fmt(row["bound"]),
                        row["branch"],
                        _fmt(row["critical_c"]),
                        _fmt(row["grid_max"]),
                        _fmt(row["abs_err"]),
                    ]
                )
            )
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(json.dumps(rows, indent=2) + "\n", args.output)
    return 0


def cmd_search(args) -> int:
    if args.samples < 1:
        return _usage_error(f"samples must be >= 1, got {args.samples}")
    if not 0.0 <= args.beta < 1.0:
        return _usage_error(f"beta must lie in [0, 1), got {args.beta}")
    if not 0.0 <= args.boundary_fraction <= 1.0:
        return _usage_error("boundary fraction must lie in [0, 1]")

    family = FamilyId(args.family)
    result = opt.empirical_max_h22(
        family,
        args.beta,
        args.samples,
        args.seed,
        boundary_fraction=args.boundary_fraction,
        constrain_sum=args.constrain_sum,
    )
    bound = bd.h22_bound(family, args.beta).bound
    gap = bound - result.max_value
    record = {
        "family": family.value,
        "beta": args.beta,
        "samples": args.samples,
        "seed": args.seed,
        "boundary_fraction": args.boundary_fraction,
        "constrain_sum": args.constrain_sum,
        "evaluations": result.evaluations,
        "max_abs_h22": result.max_value,
        "argmax": (
            {
                "c": result.argmax[0],
                "x": _complex_pair(result.argmax[1]),
                "y": _complex_pair(result.argmax[2]),
                "z": _complex_pair(result.argmax[3]),
                "w": _complex_pair(result.argmax[4]),
            }
            if result.argmax
            else None
        ),
        "bound": bound,
        "gap": gap,
    }
    _emit(json.dumps(record, indent=2) + "\n", args.output)
    return 0 if result.max_value <= bound + DOMINANCE_SLACK else 1


def cmd_derive(args) -> int:
    betas = args.beta if args.beta else [0.0, 0.3, 0.7]
    for beta in betas:
        if not 0.0 <= beta < 1.0:
            return _usage_error(f"beta must lie in [0, 1), got {beta}")
    if args.trials < 1:
        return _usage_error(f"trials must be >= 1, got {args.trials}")

    koebe_like = ts.TruncatedSeries.from_coeffs([0, 1, 2, 3, 4], 4)
    inverse = ts.invert_composition(koebe_like)
    inv_coeffs = ", ".join(_fmt(inverse[k].real) for k in (2, 3, 4))
    lines = [
        "inverse of z+2z^2+3z^3+4z^4: coefficients of w^2, w^3, w^4 = "
        + inv_coeffs
    ]

    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for family in (FamilyId.STARLIKE, FamilyId.CONVEX):
        for beta in betas:
            order = Order(beta)
            for _ in range(args.trials):
                draw = rng.uniform(-3.0, 3.0, 6)
                a = BiCoefficients(
                    complex(draw[0], draw[1]),
                    complex(draw[2], draw[3]),
                    complex(draw[4], draw[5]),
                )
                report = verify_coefficient_system(family, order, a)
                worst = max(worst, report.max_residual)
    lines.append(
        f"trials={args.trials} per family/beta, betas="
        + ",".join(_fmt(b) for b in betas)
        + f", seed={args.seed}"
    )
    lines.append(f"max residual: {_fmt(worst)}")
    passed = worst <= DERIVE_TOL
    lines.append(("PASS" if passed else "FAIL") + f" (tolerance {_fmt(DERIVE_TOL)})")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if passed else 1


def cmd_fs_bound(args) -> int:
    if not 0.0 <= args.beta < 1.0:
        return _usage_error(f"beta must lie in [0, 1), got {args.beta}")
    value = bd.fekete_szego_bound(FamilyId(args.family), args.beta, args.mu)
    print(_fmt(value))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {
        "verify": cmd_verify,
        "table": cmd_table,
        "search": cmd_search,
        "derive": cmd_derive,
        "fs-bound": cmd_fs_bound,
    }
    try:
        return handlers[args.command](args)
    except BihankelError as exc:
        return _usage_error(str(exc))


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
