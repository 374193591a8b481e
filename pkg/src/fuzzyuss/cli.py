"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 inconsistent system, 3 oracle
disagreement. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import io
import sys
from typing import Sequence

import numpy as np

from .errors import FuzzySystemError, Inconsistent, ParseError, ValidationError
from .general import GeneralSolution, alpha_cut, max_membership_general, region_test, solve_general
from .mat_core import DEFAULT_TOL, rank_partition
from .oracle import grid_compare
from .serialize import dumps, load_system
from .square import Parallelepiped, coefficient_intervals
from .system import FuzzySystem
from .under import UnderdeterminedSolution

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONSISTENT = 2
EXIT_DISAGREE = 3

DEFAULT_TOL_ALPHA = 1e-6


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _alpha(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie in [0, 1], got {text}")
    return value


def _alphas(text: str) -> list[float]:
    return [_alpha(v) for v in text.split(",") if v.strip()]


def _box(sol: Parallelepiped) -> dict:
    return {
        "center": sol.center,
        "generators": sol.generators,
        "coefficient_supports": coefficient_intervals(sol, 0.0),
        "coefficient_bounds": [f.to_dict() for f in sol.coeff_bounds],
    }


def _cut_record(system: FuzzySystem, sol: GeneralSolution, alpha: float, labels: bool = False) -> dict:
    cut = alpha_cut(system, sol, alpha)
    rec: dict = {"alpha": alpha, "vertices": [] if cut is None else cut.vertices}
    if isinstance(sol.detail, Parallelepiped):
        rec["coefficient_intervals"] = coefficient_intervals(sol.detail, alpha)
    elif isinstance(sol.detail, UnderdeterminedSolution):
        rec["coefficient_intervals"] = coefficient_intervals(sol.detail.box, alpha)
    if labels and cut is not None:
        rec["active_constraints"] = cut.active_constraints()
    return rec


def _max_record(system: FuzzySystem, sol: GeneralSolution, tol_alpha: float, tol: float) -> dict:
    if sol.detail is not None:
        center = sol.detail.center if isinstance(sol.detail, Parallelepiped) else sol.detail.box.center
        return {"x": center, "alpha": 1.0}
    x, level = max_membership_general(system, tol_alpha, tol)
    return {"x": x, "alpha": level}


def _solve(system: FuzzySystem, tol: float):
    try:
        return solve_general(system, tol)
    except Inconsistent:
        return None


def _inconsistent_doc(system: FuzzySystem, tol: float) -> dict:
    return {"case": "inconsistent", "rank": rank_partition(system.A, tol).k, "m": system.m, "n": system.n}


def cmd_solve(args, system: FuzzySystem, out) -> int:
    sol = _solve(system, args.tol)
    if sol is None:
        out.write(dumps(_inconsistent_doc(system, args.tol)))
        print("error: inconsistent system (the bands do not intersect)", file=sys.stderr)
        return EXIT_INCONSISTENT
    doc: dict = {"case": sol.case, "rank": sol.k, "m": system.m, "n": system.n}
    doc["tolerances"] = {"tol": args.tol, "tol_alpha": args.tol_alpha}
    if isinstance(sol.detail, Parallelepiped):
        doc["parallelepiped"] = _box(sol.detail)
    elif isinstance(sol.detail, UnderdeterminedSolution):
        doc["parallelepiped"] = _box(sol.detail.box)
    doc["particular"] = {"vertices": sol.particular.vertices, "interior_point": sol.particular.interior_point}
    doc["null_basis"] = sol.null_basis
    doc["alpha_cut"] = _cut_record(system, sol, args.alpha)
    doc["max_membership"] = _max_record(system, sol, args.tol_alpha, args.tol)
    if args.point:
        doc["queries"] = [
            {"point": p, "membership": system.membership(np.array(p))} for p in args.point
        ]
    out.write(dumps(doc))
    return EXIT_OK


def cmd_membership(args, system: FuzzySystem, out) -> int:
    x = np.array(args.point)
    rows = system.row_memberships(x)
    mu = float(rows.min())
    doc = {
        "point": x,
        "membership": mu,
        "rows": rows,
        "status": "solution" if mu > 0.0 else "not a solution",
    }
    out.write(dumps(doc))
    return EXIT_OK


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(repr(float(v)) if not isinstance(v, str) else v for v in row) + "\n")
    return buf.getvalue()


def _coord_names(n: int) -> list[str]:
    return [f"x{j + 1}" for j in range(n)]


def cmd_vertices(args, system: FuzzySystem, out) -> int:
    sol = _solve(system, args.tol)
    if sol is None:
        print("error: inconsistent system (the bands do not intersect)", file=sys.stderr)
        return EXIT_INCONSISTENT
    rec = _cut_record(system, sol, args.alpha, labels=True)
    if args.format == "csv":
        out.write(_csv(_coord_names(system.n), rec["vertices"]))
    else:
        out.write(dumps({"case": sol.case, "null_basis": sol.null_basis, **rec}))
    return EXIT_OK


def cmd_max_membership(args, system: FuzzySystem, out) -> int:
    sol = _solve(system, args.tol)
    if sol is None:
        print("error: inconsistent system (the bands do not intersect)", file=sys.stderr)
        return EXIT_INCONSISTENT
    out.write(dumps(_max_record(system, sol, args.tol_alpha, args.tol)))
    return EXIT_OK


def default_bbox(sol: GeneralSolution) -> np.ndarray:
    V = sol.particular.vertices
    lo, hi = V.min(axis=0), V.max(axis=0)
    pad = 0.25 * (hi - lo) + 0.5
    return np.column_stack([lo - pad, hi + pad])


def cmd_oracle(args, system: FuzzySystem, out) -> int:
    sol = _solve(system, args.tol)
    if sol is None:
        test = lambda X: np.zeros(len(X), dtype=bool)  # noqa: E731
        if args.bbox is None:
            print("error: inconsistent system; pass --bbox to sample it", file=sys.stderr)
            return EXIT_INCONSISTENT
    else:
        test = region_test(system, sol, args.alpha)
    bbox = default_bbox(sol) if args.bbox is None else np.array(args.bbox).reshape(-1, 2)
    if bbox.shape != (system.n, 2):
        raise ValidationError(f"--bbox needs {2 * system.n} numbers (lo,hi per axis), got {bbox.size}")
    report = grid_compare(system, test, bbox, args.resolution, args.alpha)
    out.write(dumps({"case": "inconsistent" if sol is None else sol.case, "alpha": args.alpha, **report.to_dict()}))
    if report.disagreements:
        print(f"error: {report.disagreements} disagreement(s) with direct membership", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_plot_data(args, system: FuzzySystem, out) -> int:
    sol = _solve(system, args.tol)
    if sol is None:
        print("error: inconsistent system (the bands do not intersect)", file=sys.stderr)
        return EXIT_INCONSISTENT
    layers = [_cut_record(system, sol, a) for a in args.alphas]
    peak = _max_record(system, sol, args.tol_alpha, args.tol)
    if args.format == "csv":
        rows = [[repr(layer["alpha"]), str(i), *v] for layer in layers for i, v in enumerate(layer["vertices"])]
        out.write(_csv(["alpha", "vertex", *_coord_names(system.n)], rows))
    else:
        out.write(dumps({"case": sol.case, "null_basis": sol.null_basis, "layers": layers, "max_membership": peak}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fuzzyuss",
        description="Solve linear systems with a crisp matrix and fuzzy right-hand side.",
        epilog="Negative point coordinates need the = form, e.g. --point=-3,4.5,1,-1",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="system file (JSON)")
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL, help="rank tolerance (default: 1e-10)")
        sp.set_defaults(func=func)
        return sp

    sp = add("solve", cmd_solve, "full solution document")
    sp.add_argument("--alpha", type=_alpha, default=0.0, help="level of the reported cut (default: 0)")
    sp.add_argument("--tol-alpha", type=float, default=DEFAULT_TOL_ALPHA, help="bisection tolerance (default: 1e-6)")
    sp.add_argument("--point", type=_floats, action="append", help="also grade this point (repeatable)")

    sp = add("membership", cmd_membership, "membership of one point")
    sp.add_argument("--point", type=_floats, required=True, help="comma-separated coordinates")

    sp = add("vertices", cmd_vertices, "vertices of an alpha-cut")
    sp.add_argument("--alpha", type=_alpha, default=0.0)
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = add("max-membership", cmd_max_membership, "point of highest membership")
    sp.add_argument("--tol-alpha", type=float, default=DEFAULT_TOL_ALPHA, help="bisection tolerance (default: 1e-6)")

    sp = add("oracle", cmd_oracle, "grid check of the geometric solution against direct membership")
    sp.add_argument("--alpha", type=_alpha, default=0.0)
    sp.add_argument("--bbox", type=_floats, help="lo1,hi1,lo2,hi2,... (default: padded particular set)")
    sp.add_argument("--resolution", type=int, default=50, help="grid points per axis (default: 50)")

    sp = add("plot-data", cmd_plot_data, "vertex lists of several alpha-cuts")
    sp.add_argument("--alphas", type=_alphas, default=[0.0, 0.25, 0.5, 0.75])
    sp.add_argument("--tol-alpha", type=float, default=DEFAULT_TOL_ALPHA, help="bisection tolerance (default: 1e-6)")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        system = load_system(args.file)
        return args.func(args, system, sys.stdout)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Inconsistent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except FuzzySystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
