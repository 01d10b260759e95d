"""Command-line interface.

Angles given as flags are in degrees; everything is radians internally.
Exit status: 0 success, 2 invalid input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from pathlib import Path

import numpy as np

from . import io as fio
from . import lsq, verify
from .errors import NumericalError, ValidationError
from .geometry import AnnulusSpec, eccentric_points, polar_points, table1_fixture
from .mapping import (
    SEAM_COLUMN_OFFSET, SEAM_MODES, ForwardMapping, eval_forward, fit_forward, fit_inverse,
    generalization_grid,
)
from .metrics import DEFAULT_JAC_TOL
from .pde import METRIC_SOURCES, annulus_problem, compare_with_exact, exact_eccentric, solve_problem

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL = 0, 2, 3


def _env_float(name: str, default: float) -> float:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return float(value)
    except ValueError:
        raise ValidationError(f"{name}={value!r} is not a number") from None


def _emit(text: str, out: str | None):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _warn(msg: str):
    print(f"warning: {msg}", file=sys.stderr)


# -- gen-points --------------------------------------------------------------

def cmd_gen_points(args) -> int:
    if args.geometry == "polar":
        pts = polar_points(args.r0, args.r1, np.radians(args.theta0), np.radians(args.theta1),
                           args.I, args.J, closed=args.closed)
    elif args.geometry == "eccentric":
        pts = eccentric_points(AnnulusSpec(args.a, args.R, args.cI, args.I, args.J))
    else:
        pts = table1_fixture(args.corrected)
    _emit(fio.points_to_csv(pts), args.out)
    print(f"{pts.size} points ({pts.I + 1} x {pts.J + 1}, {pts.topology})", file=sys.stderr)
    return EXIT_OK


# -- fit ---------------------------------------------------------------------

def cmd_fit(args) -> int:
    pts = fio.read_points(args.points, args.topology)
    rel_tol = args.rel_tol if args.rel_tol is not None else _env_float("CURVIFIT_REL_TOL", lsq.DEFAULT_REL_TOL)
    if args.direction == "forward":
        mapping = fit_forward(pts, args.M, args.seam, rel_tol, args.normalize)
        names, targets = ("xi", "eta"), (pts.xi, pts.eta)
    else:
        mapping = fit_inverse(pts, args.M, rel_tol, args.normalize)
        names, targets = ("x", "y"), (pts.x, pts.y)
    _emit(fio.dump_mapping(mapping, pts.topology), args.out)

    for name, target, info in zip(names, targets, mapping.info):
        print(f"{name}: max |residual| {info.max_abs_residual:.6g}, "
              f"residual norm {info.residual_norm:.6g}, rank {info.rank}", file=sys.stderr)
        if info.dropped_columns:
            _warn(f"{name}: rank-deficient fit, dropped columns {list(info.dropped_columns)}")
        span = float(np.ptp(target)) or 1.0
        if info.max_abs_residual > 0.1 * span:
            _warn(f"{name}: residual exceeds 10% of the target range; degree {args.M} "
                  f"is not adequate for these points")
    return EXIT_OK


# -- eval --------------------------------------------------------------------

_DERIV = re.compile(r"^(xi|eta|x|y)(?:_((?:xi|eta|x|y)+))?$")


def parse_component(name: str, mapping) -> tuple[str, int, int]:
    """``x_xieta`` -> (``x``, 1, 1) for inverse maps, ``xi_xy`` -> (``xi``, 1, 1)
    for forward maps."""
    forward = isinstance(mapping, ForwardMapping)
    outputs, inputs = (("xi", "eta"), ("x", "y")) if forward else (("x", "y"), ("xi", "eta"))
    m = _DERIV.match(name)
    if not m or m.group(1) not in outputs:
        raise ValidationError(f"unknown component {name!r} for a "
                              f"{'forward' if forward else 'inverse'} mapping")
    tokens = re.findall("xi|eta|x|y", m.group(2) or "")
    if any(t not in inputs for t in tokens):
        raise ValidationError(f"component {name!r}: derivatives must be taken in {inputs}")
    return m.group(1), tokens.count(inputs[0]), tokens.count(inputs[1])


def cmd_eval(args) -> int:
    mapping = fio.load_mapping(args.mapping)
    forward = isinstance(mapping, ForwardMapping)
    polys = ({"xi": mapping.xi_poly, "eta": mapping.eta_poly} if forward
             else {"x": mapping.x_poly, "y": mapping.y_poly})
    in_names = ("x", "y") if forward else ("xi", "eta")
    targets = ("xi", "eta") if forward else ("x", "y")

    j_index = None
    target_cols = {}
    if args.points:
        cols = fio.read_table(Path(args.points).read_text(encoding="utf-8"))
        missing = [n for n in in_names if n not in cols]
        if missing:
            raise ValidationError(f"{args.points} lacks columns {missing}")
        u, v = cols[in_names[0]], cols[in_names[1]]
        target_cols = {t: cols[t] for t in targets if t in cols}
        if forward and mapping.seam is not None and "eta" in cols:
            # grid nodes: the column index comes from the point-set structure
            grid = fio.points_from_csv(Path(args.points).read_text(encoding="utf-8"))
            j_index = np.tile(np.arange(grid.J + 1), grid.I + 1)
    else:
        a, b, n, c, d, k = args.grid
        us = np.linspace(a, b, int(n) + 1)
        vs = np.linspace(c, d, int(k) + 1)
        if args.degrees:
            vs = np.radians(vs)
        U, V = np.meshgrid(us, vs, indexing="ij")
        u, v = U.ravel(), V.ravel()

    names = args.component or list(targets)
    columns = {in_names[0]: u, in_names[1]: v}
    if args.degrees and not forward:
        columns["eta_deg"] = np.degrees(v)
    for name in names:
        out, du, dv = parse_component(name, mapping)
        if (du, dv) == (0, 0) and forward and out == "eta":
            columns[name] = eval_forward(mapping, u, v, j=j_index).eta
        else:
            columns[name] = polys[out].differentiate(du, dv)(u, v)
        if (du, dv) == (0, 0) and out in target_cols:
            res = columns[name] - target_cols[out]
            columns[f"res_{out}"] = res
            print(f"{out}: max |residual| {np.max(np.abs(res)):.6g}, "
                  f"residual norm {np.linalg.norm(res):.6g}", file=sys.stderr)

    if args.layout == "table":
        if len(names) != 1 or args.points:
            raise ValidationError("--layout table needs --grid and exactly one component")
        a, b, n, c, d, k = args.grid
        vals = columns[names[0]].reshape(int(n) + 1, int(k) + 1)
        header_v = np.linspace(c, d, int(k) + 1)
        table = {"eta": header_v}
        for i, uval in enumerate(np.linspace(a, b, int(n) + 1)):
            table[f"xi={uval:g}"] = vals[i]
        _emit(fio.columns_to_csv(table), args.out)
    else:
        _emit(fio.columns_to_csv(columns), args.out)
    return EXIT_OK


# -- grid --------------------------------------------------------------------

def cmd_grid(args) -> int:
    mapping = fio.load_mapping(args.mapping)
    if isinstance(mapping, ForwardMapping):
        raise ValidationError("generalization grids are drawn from inverse mappings")
    if args.points:
        pts = fio.read_points(args.points)
        xi_nodes, eta_nodes = pts.xi, pts.eta
    else:
        a, b, n, c, d, k = args.grid
        xi_nodes = np.linspace(a, b, int(n) + 1)
        eta_nodes = np.linspace(c, d, int(k) + 1)
        if args.degrees:
            eta_nodes = np.radians(eta_nodes)
    lines = generalization_grid(mapping, xi_nodes, eta_nodes, args.refine)
    _emit(fio.polylines_to_csv(lines), args.out)
    if args.svg:
        Path(args.svg).write_text(fio.polylines_to_svg(lines), encoding="utf-8")
    return EXIT_OK


# -- solve -------------------------------------------------------------------

def cmd_solve(args) -> int:
    spec = AnnulusSpec(args.a, args.R, args.cI, args.I, args.J)
    rel_tol = args.rel_tol if args.rel_tol is not None else _env_float("CURVIFIT_REL_TOL", lsq.DEFAULT_REL_TOL)
    jac_tol = args.jac_tol if args.jac_tol is not None else _env_float("CURVIFIT_JAC_TOL", DEFAULT_JAC_TOL)
    problem = annulus_problem(spec, args.M, args.phiA, args.phiR, args.metric, rel_tol, jac_tol)
    sol = solve_problem(problem)
    eta_deg = np.degrees(problem.eta)
    if spec.concentric:
        table = compare_with_exact(sol, problem)
        _emit(fio.potential_to_csv(problem.xi, eta_deg, sol.phi, table.exact), args.out)
        print(f"max |phi - exact| = {table.max_error:.6g}", file=sys.stderr)
    else:
        _emit(fio.potential_to_csv(problem.xi, eta_deg, sol.phi), args.out)
        pts = eccentric_points(spec)
        err = np.abs(sol.phi - exact_eccentric(args.phiA, args.phiR, spec, pts.x, pts.y)).max()
        print(f"max |phi - exact eccentric potential| = {err:.6g}", file=sys.stderr)
    print(f"linear residual {sol.residual_norm:.3g}", file=sys.stderr)
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    ok, checks = verify.run(names)
    for c in checks:
        print(c.line())
    failed = [c for c in checks if c.hard and not c.passed]
    if failed:
        print(f"{len(failed)} check(s) failed:", file=sys.stderr)
        for c in failed:
            print(f"  {c.name}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_NUMERICAL


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="curvifit",
                                description="Least-squares curvilinear coordinate generation.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-points", help="write a mesh point CSV")
    gsub = g.add_subparsers(dest="geometry", required=True)
    gp = gsub.add_parser("polar")
    gp.add_argument("--r0", type=float, default=1.0)
    gp.add_argument("--r1", type=float, default=2.0)
    gp.add_argument("--theta0", type=float, default=0.0, help="degrees")
    gp.add_argument("--theta1", type=float, default=360.0, help="degrees")
    gp.add_argument("--I", type=int, required=True)
    gp.add_argument("--J", type=int, required=True)
    gp.add_argument("--closed", action="store_true")
    ge = gsub.add_parser("eccentric")
    ge.add_argument("--a", type=float, default=2.0)
    ge.add_argument("--R", type=float, default=6.0)
    ge.add_argument("--cI", type=float, default=0.0)
    ge.add_argument("--I", type=int, default=4)
    ge.add_argument("--J", type=int, default=6)
    gt = gsub.add_parser("table1")
    gt.add_argument("--corrected", action="store_true",
                    help="use 0.75 for the angular line printed as 0.27")
    for sp in (gp, ge, gt):
        sp.add_argument("--out", "-o", default="-")
    g.set_defaults(func=cmd_gen_points)

    f = sub.add_parser("fit", help="fit a forward or inverse mapping")
    f.add_argument("points")
    f.add_argument("--direction", choices=("forward", "inverse"), default="inverse")
    f.add_argument("--M", type=int, required=True)
    f.add_argument("--seam", choices=SEAM_MODES, default=SEAM_COLUMN_OFFSET)
    f.add_argument("--topology", default=None, help="override seam auto-detection")
    f.add_argument("--rel-tol", type=float, default=None, help="pivot truncation threshold")
    f.add_argument("--normalize", action="store_true")
    f.add_argument("--out", "-o", default="-")
    f.set_defaults(func=cmd_fit)

    e = sub.add_parser("eval", help="evaluate a mapping and its derivatives")
    e.add_argument("mapping")
    src = e.add_mutually_exclusive_group(required=True)
    src.add_argument("--points", help="CSV with input columns (xi,eta or x,y)")
    src.add_argument("--grid", type=float, nargs=6, metavar=("U0", "U1", "NU", "V0", "V1", "NV"))
    e.add_argument("--degrees", action="store_true", help="second grid coordinate in degrees")
    e.add_argument("--component", "-c", action="append",
                   help="e.g. x, x_xi, y_etaeta, xi_xy; repeatable")
    e.add_argument("--layout", choices=("rows", "table"), default="rows")
    e.add_argument("--out", "-o", default="-")
    e.set_defaults(func=cmd_eval)

    gr = sub.add_parser("grid", help="refined coordinate lines of an inverse mapping")
    gr.add_argument("mapping")
    src = gr.add_mutually_exclusive_group(required=True)
    src.add_argument("--points")
    src.add_argument("--grid", type=float, nargs=6, metavar=("XI0", "XI1", "I", "ETA0", "ETA1", "J"))
    gr.add_argument("--degrees", action="store_true")
    gr.add_argument("--refine", type=int, default=2)
    gr.add_argument("--svg")
    gr.add_argument("--out", "-o", default="-")
    gr.set_defaults(func=cmd_grid)

    s = sub.add_parser("solve", help="Laplace Dirichlet problem on the annulus grid")
    s.add_argument("--a", type=float, default=2.0)
    s.add_argument("--R", type=float, default=6.0)
    s.add_argument("--cI", type=float, default=0.0)
    s.add_argument("--I", type=int, default=4)
    s.add_argument("--J", type=int, default=6)
    s.add_argument("--M", type=int, default=6)
    s.add_argument("--phiA", type=float, default=0.0)
    s.add_argument("--phiR", type=float, default=1.0)
    s.add_argument("--metric", choices=METRIC_SOURCES, default="inverse-fit")
    s.add_argument("--rel-tol", type=float, default=None)
    s.add_argument("--jac-tol", type=float, default=None)
    s.add_argument("--out", "-o", default="-")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="reproduce the published examples")
    v.add_argument("suite", choices=(*verify.SUITES, "all"))
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
