#!/usr/bin/env python
"""
Simplex toolkit CLI - absorption indices, projector norms, bounds and tables.

Examples:
  # xi of the catalog simplex S1 (prints 3 and the witness vertices)
  python scripts/simplex_cli.py catalog s1 | python scripts/simplex_cli.py xi

  # Projector norm on the cube for a simplex file
  python scripts/simplex_cli.py norm-cube my_simplex.txt

  # d_n for n = 1..50 as CSV
  python scripts/simplex_cli.py d-series --max 50 --format csv

  # Minimal xi over (0,1)-simplices, n = 6 (long-running)
  python scripts/simplex_cli.py search-01 -n 6 --allow-long --workers 8

Simplex files hold one vertex per line (rational entries such as 1/3, '#'
comments allowed); '-' reads stdin. Exit codes: 0 success, 2 invalid input,
3 computational limit.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

# Ensure src/ package is importable: add the repo root (parent of 'src') to sys.path
ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from src.config.settings import configure_logging, get_config, load_config, validate_config
from src.exceptions import ComputationLimitError, SimplexToolkitError, ValidationError
from src.utils.io import emit, format_simplex, parse_matrix, parse_simplex, read_text

logger = logging.getLogger("simplex_cli")


def _simplex(args: argparse.Namespace):
    from src.families.catalog import resolve

    if getattr(args, "catalog", None):
        return resolve(args.catalog, n=args.n or 3)
    return parse_simplex(read_text(args.simplex), floats=args.floats)


def _ball(args: argparse.Namespace, n: int):
    from src.geometry.ball import Ball

    if args.center is None and args.radius is None:
        return None
    center = tuple(float(x) for x in args.center.split(",")) if args.center else (0.0,) * n
    return Ball(center=center, radius=1.0 if args.radius is None else args.radius)


def cmd_xi(args: argparse.Namespace) -> int:
    from src.geometry.cube import xi_cube

    emit(xi_cube(_simplex(args), max_witnesses=args.max_witnesses), args.format)
    return 0


def cmd_alpha(args: argparse.Namespace) -> int:
    from src.geometry.cube import alpha_cube

    emit(alpha_cube(_simplex(args)), args.format)
    return 0


def cmd_diam(args: argparse.Namespace) -> int:
    from src.geometry.cube import axial_diameters

    S = _simplex(args)
    emit([{"i": i, "d": d} for i, d in enumerate(axial_diameters(S), start=1)], args.format)
    return 0


def cmd_norm_cube(args: argparse.Namespace) -> int:
    from src.geometry.cube import check_bilateral, projector_norm_cube, projector_norm_cube_naive

    S = _simplex(args)
    if args.naive:
        report = projector_norm_cube_naive(S)
    else:
        report = projector_norm_cube(S, workers=args.workers)
    emit(check_bilateral(S, report) if args.bilateral else report, args.format)
    return 0


def cmd_norm_ball(args: argparse.Namespace) -> int:
    from src.geometry.ball import projector_norm_ball

    S = _simplex(args)
    emit(projector_norm_ball(S, _ball(args, S.n), workers=args.workers), args.format)
    return 0


def cmd_ball_report(args: argparse.Namespace) -> int:
    from src.geometry.ball import ball_report

    S = _simplex(args)
    emit(ball_report(S, _ball(args, S.n)), args.format)
    return 0


def cmd_psi(args: argparse.Namespace) -> int:
    from src.geometry.ball import psi_norm

    emit(psi_norm(args.n), args.format)
    return 0


def cmd_d_series(args: argparse.Namespace) -> int:
    from src.geometry.ball import d_n_series

    emit([{"n": n, "d_n": d} for n, d in d_n_series(args.max)], args.format)
    return 0


def cmd_theta_lower(args: argparse.Namespace) -> int:
    from src.bounds.fixtures import max_determinant
    from src.bounds.legendre import theta_lower_ball, theta_lower_cube
    from src.numerics import parse_rational

    if args.ball:
        emit({"n": args.n, "theta_lower_ball": theta_lower_ball(args.n)}, args.format)
        return 0
    if args.nu is not None:
        nu = parse_rational(args.nu)
    else:
        known = max_determinant(args.n)
        if known is None:
            print(f"No imported h_{args.n}; pass --nu p/q", file=sys.stderr)
            return 2
        nu = known.nu
    emit(theta_lower_cube(args.n, nu), args.format)
    return 0


def cmd_slice_measure(args: argparse.Namespace) -> int:
    from src.bounds.legendre import slice_measure

    emit({"n": args.n, "gamma": args.gamma, "measure": slice_measure(args.n, args.gamma)}, args.format)
    return 0


def cmd_hadamard_simplex(args: argparse.Namespace) -> int:
    from src.combinatorics.hadamard import hadamard_simplex

    sys.stdout.write(format_simplex(hadamard_simplex(args.n)))
    return 0


def cmd_maxdet_check(args: argparse.Namespace) -> int:
    from src.combinatorics.maxdet import maxdet_diagnostic

    emit(maxdet_diagnostic(parse_matrix(read_text(args.matrix))), args.format)
    return 0


def cmd_h_search(args: argparse.Namespace) -> int:
    from src.combinatorics.maxdet import h_search

    emit(h_search(args.n, allow_long=args.allow_long, workers=args.workers), args.format)
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    from src.families.catalog import catalog_names, resolve

    if args.list or not args.name:
        for name in catalog_names() + ["s-star(n)", "hadamard(n)", "v(s,t)"]:
            print(name)
        return 0
    sys.stdout.write(format_simplex(resolve(args.name, n=args.n or 3)))
    return 0


def cmd_cut_volumes(args: argparse.Namespace) -> int:
    from src.families.volumes import cut_volumes, v_closed_form
    from src.numerics import parse_rational

    if args.closed_form is not None:
        emit(v_closed_form(parse_rational(args.closed_form)), args.format)
    else:
        emit(cut_volumes(_simplex(args)), args.format)
    return 0


def cmd_perfect_check(args: argparse.Namespace) -> int:
    from src.families.volumes import is_perfect

    emit(is_perfect(_simplex(args), workers=args.workers), args.format)
    return 0


def cmd_inscription_check(args: argparse.Namespace) -> int:
    from src.geometry.cube import quasi_rigidity_probe, theorem61_diagnostics

    S = _simplex(args)
    emit({
        "diagnostics": theorem61_diagnostics(S),
        "quasi_rigidity": quasi_rigidity_probe(S, trials=args.trials, rng_seed=args.seed),
    }, args.format)
    return 0


def cmd_search_01(args: argparse.Namespace) -> int:
    from src.families.search import search_01

    emit(search_01(args.n, args.objective, allow_long=args.allow_long, workers=args.workers), args.format)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    from src.reports.tables import build_table
    from src.utils.io import save_report

    rows = build_table(args.name, allow_long=args.allow_long, workers=args.workers)
    if args.output:
        save_report(rows, args.output, args.format)
    else:
        emit(rows, args.format)
    return 0


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], help="Report format (default from config: json)")
    common.add_argument("--workers", type=int, help="Worker threads (default from config / SIMPLEX_WORKERS)")
    common.add_argument("--seed", type=int, help="RNG seed for sampled probes")
    common.add_argument("--allow-long", action="store_true", default=None,
                        help="Permit long-running n = 6 searches")
    common.add_argument("--config", help="JSON configuration file")
    common.add_argument("--log-level", help="Logging level override, e.g. DEBUG")
    return common


def _simplex_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("simplex", nargs="?", default="-", help="Simplex file ('-' for stdin, the default)")
    p.add_argument("--catalog", help="Use a catalog simplex instead: s1, s2, h7, t8, s-star(n), hadamard(n), v(s,t)")
    p.add_argument("-n", type=int, help="Dimension for s-star without an explicit n")
    p.add_argument("--floats", action="store_true", help="Accept decimal entries (exact binary values are used)")


def _ball_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--center", help="Ball center as comma-separated floats (default: the origin)")
    p.add_argument("--radius", type=float, help="Ball radius")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    p = argparse.ArgumentParser(description="Simplex toolkit CLI")
    sub = p.add_subparsers(dest="cmd", required=True)

    p_xi = sub.add_parser("xi", parents=[common], help="Absorption index xi(Q_n; S) with witnesses")
    _simplex_input(p_xi)
    p_xi.add_argument("--max-witnesses", type=int, help="Truncate witness lists (counts stay exact)")
    p_xi.set_defaults(func=cmd_xi)

    p_alpha = sub.add_parser("alpha", parents=[common], help="alpha(Q_n; S) and alpha(Q'_n; S)")
    _simplex_input(p_alpha)
    p_alpha.set_defaults(func=cmd_alpha)

    p_diam = sub.add_parser("diam", parents=[common], help="Axial diameters d_i(S)")
    _simplex_input(p_diam)
    p_diam.set_defaults(func=cmd_diam)

    p_nc = sub.add_parser("norm-cube", parents=[common], help="Projector norm on Q_n")
    _simplex_input(p_nc)
    p_nc.add_argument("--naive", action="store_true", help="Use the direct substitution path")
    p_nc.add_argument("--bilateral", action="store_true", help="Report both sides of the xi / norm inequality")
    p_nc.set_defaults(func=cmd_norm_cube)

    p_nb = sub.add_parser("norm-ball", parents=[common], help="Projector norm on a ball")
    _simplex_input(p_nb)
    _ball_input(p_nb)
    p_nb.set_defaults(func=cmd_norm_ball)

    p_br = sub.add_parser("ball-report", parents=[common], help="alpha, xi, inradius, circumradius on a ball")
    _simplex_input(p_br)
    _ball_input(p_br)
    p_br.set_defaults(func=cmd_ball_report)

    p_psi = sub.add_parser("psi", parents=[common], help="Norm of the regular simplex projector on B_n")
    p_psi.add_argument("-n", type=int, required=True)
    p_psi.set_defaults(func=cmd_psi)

    p_ds = sub.add_parser("d-series", parents=[common], help="d_n = sqrt(n+1) - psi norm for n = 1..max")
    p_ds.add_argument("--max", type=int, default=50)
    p_ds.set_defaults(func=cmd_d_series)

    p_tl = sub.add_parser("theta-lower", parents=[common], help="Legendre lower bounds for theta_n")
    p_tl.add_argument("-n", type=int, required=True)
    body = p_tl.add_mutually_exclusive_group(required=True)
    body.add_argument("--cube", action="store_true")
    body.add_argument("--ball", action="store_true")
    p_tl.add_argument("--nu", help="Maximum simplex volume in Q_n (default: imported h_n/n!)")
    p_tl.set_defaults(func=cmd_theta_lower)

    p_sm = sub.add_parser("slice-measure", parents=[common], help="Measure of the cube slice, chi_n(gamma)/n!")
    p_sm.add_argument("-n", type=int, required=True)
    p_sm.add_argument("--gamma", type=float, required=True)
    p_sm.set_defaults(func=cmd_slice_measure)

    p_hs = sub.add_parser("hadamard-simplex", parents=[common], help="Regular (0,1)-simplex for n+1 a Hadamard order")
    p_hs.add_argument("-n", type=int, required=True)
    p_hs.set_defaults(func=cmd_hadamard_simplex)

    p_md = sub.add_parser("maxdet-check", parents=[common], help="Row-sum test on a (0,1)-matrix")
    p_md.add_argument("matrix", nargs="?", default="-", help="Matrix file ('-' for stdin)")
    p_md.set_defaults(func=cmd_maxdet_check)

    p_h = sub.add_parser("h-search", parents=[common], help="Exhaustive maximal (0,1)-determinant, n <= 6")
    p_h.add_argument("-n", type=int, required=True)
    p_h.set_defaults(func=cmd_h_search)

    p_cat = sub.add_parser("catalog", parents=[common], help="Print a named simplex in the simplex file format")
    p_cat.add_argument("name", nargs="?")
    p_cat.add_argument("-n", type=int, help="Dimension for s-star without an explicit n")
    p_cat.add_argument("--list", action="store_true", help="List catalog names")
    p_cat.set_defaults(func=cmd_catalog)

    p_cv = sub.add_parser("cut-volumes", parents=[common], help="Cube volumes cut off by the face hyperplanes")
    _simplex_input(p_cv)
    p_cv.add_argument("--closed-form", metavar="T", help="Evaluate v1(t), v2(t) of V(s,t) instead")
    p_cv.set_defaults(func=cmd_cut_volumes)

    p_pc = sub.add_parser("perfect-check", parents=[common], help="Cube vertices on the faces of xi(S)S")
    _simplex_input(p_pc)
    p_pc.set_defaults(func=cmd_perfect_check)

    p_ic = sub.add_parser("inscription-check", parents=[common],
                          help="Diagnostics for S in Q_n in nS and a random vertex-replacement probe")
    _simplex_input(p_ic)
    p_ic.add_argument("--trials", type=int, help="Replacement trials (default from config)")
    p_ic.set_defaults(func=cmd_inscription_check)

    p_s01 = sub.add_parser("search-01", parents=[common], help="Minimal xi or norm over (0,1)-simplices, n <= 6")
    p_s01.add_argument("-n", type=int, required=True)
    p_s01.add_argument("--objective", choices=["xi", "norm"], default="xi")
    p_s01.set_defaults(func=cmd_search_01)

    p_tab = sub.add_parser("table", parents=[common], help="Reproduce a table of small-dimension values")
    p_tab.add_argument("--name", required=True, choices=["xi-small", "theta-upper-small", "theta-lower", "t6"])
    p_tab.add_argument("--output", help="Write to a file under the output directory instead of stdout")
    p_tab.set_defaults(func=cmd_table)

    return p


def _apply_overrides(args: argparse.Namespace) -> None:
    if args.config:
        load_config(args.config)
    config = get_config()
    if args.workers is not None:
        config.compute.max_workers = max(1, args.workers)
    if args.allow_long:
        config.compute.allow_long = True
    if args.seed is not None:
        config.sampling.rng_seed = args.seed
    if args.format:
        config.output.format = args.format
    if args.log_level:
        config.logging.level = args.log_level.upper()
    configure_logging(config.logging)
    if not validate_config():
        logger.warning("Configuration failed validation; continuing with the values given")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _apply_overrides(args)
    try:
        return args.func(args)
    except ValidationError as e:
        logger.error(f"{args.cmd} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ComputationLimitError as e:
        logger.error(f"{args.cmd} stopped: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 3
    except SimplexToolkitError as e:
        logger.error(f"{args.cmd} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
