"""Command line front end.

Subcommands:

    plan      one grid point -> one-row CSV (sweep columns)
    sweep     full distance sweep -> CSV
    simulate  Monte Carlo per distance -> CSV with analytic columns
    classify  auxiliary rate in bits/s -> technology label

Exit codes: 0 success, 1 validation error, 2 when every requested point is
infeasible (auxiliary distance beyond the delay-matching bound).
"""

from __future__ import annotations

import argparse
import sys

from .bertable import BerTableError, load_ber_table, load_builtin_table
from .planner import InfeasibleAuxDistanceError
from .scenario import (
    ScenarioError,
    classify_aux_technology,
    load_scenario,
    plan_point,
    simulate,
    sweep,
    write_sim_csv,
    write_sweep_csv,
)
from .sim import ERROR_MODES


def _add_scenario_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scenario", required=True, help="scenario file (key = value format)")
    p.add_argument("--ber-table", help="BER table CSV; overrides the scenario's ber_table")
    p.add_argument("--out", help="output CSV path; overrides the scenario's output")
    p.add_argument(
        "--interpolate",
        action="store_true",
        help="linearly interpolate BER between tabulated distances",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twolane", description="Two-lane erasure-coded link toolkit."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_plan = sub.add_parser("plan", help="plan a single grid point")
    _add_scenario_args(p_plan)
    p_plan.add_argument(
        "--d-main-cm",
        type=float,
        help="main-lane distance to plan (default: the sweep start)",
    )

    p_sweep = sub.add_parser("sweep", help="plan every distance in the scenario grid")
    _add_scenario_args(p_sweep)

    p_sim = sub.add_parser("simulate", help="Monte Carlo runs per grid distance")
    _add_scenario_args(p_sim)
    p_sim.add_argument("--seed", type=int, help="override the scenario seed")
    p_sim.add_argument(
        "--generations", type=int, default=1000, help="generations per distance"
    )
    p_sim.add_argument(
        "--mode", choices=ERROR_MODES, default="analytic-erasure", help="error model"
    )

    p_cls = sub.add_parser("classify", help="label an auxiliary rate")
    p_cls.add_argument("rate_bps", type=float, help="auxiliary-lane rate in bits/s")

    return parser


def _load_inputs(args):
    sc = load_scenario(args.scenario)
    table_path = args.ber_table or sc.ber_table
    if table_path is None:
        raise ScenarioError("no BER table: give --ber-table or a ber_table scenario key")
    if table_path == "builtin":
        return sc, load_builtin_table()
    return sc, load_ber_table(table_path)


def _emit(rows, write_csv, out_path) -> None:
    if out_path:
        write_csv(rows, out_path)
        print(f"wrote {len(rows)} rows to {out_path}")
    else:
        write_csv(rows, sys.stdout)


def _warn_errors(errors) -> None:
    for e in errors:
        print(f"warning: d_main={e.d_main_cm} cm skipped: {e.message}", file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "classify":
            print(classify_aux_technology(args.rate_bps))
            return 0

        sc, table = _load_inputs(args)
        out_path = args.out or sc.output

        if args.command == "plan":
            d = args.d_main_cm if args.d_main_cm is not None else sc.d_start_cm
            try:
                row = plan_point(sc, table, d, interpolate=args.interpolate)
            except InfeasibleAuxDistanceError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
            _emit([row], write_sweep_csv, out_path)
            label = classify_aux_technology(row.aux_rate_bps)
            print(f"aux technology: {label}", file=sys.stderr)
            return 0

        if args.command == "sweep":
            rows, errors = sweep(sc, table, interpolate=args.interpolate)
            _warn_errors(errors)
            if not rows and errors:
                print("error: every sweep point is infeasible", file=sys.stderr)
                return 2
            _emit(rows, write_sweep_csv, out_path)
            return 0

        # simulate
        rows, errors = simulate(
            sc,
            table,
            generations=args.generations,
            mode=args.mode,
            interpolate=args.interpolate,
            seed=args.seed,
        )
        _warn_errors(errors)
        if not rows and errors:
            print("error: every sweep point is infeasible", file=sys.stderr)
            return 2
        _emit(rows, write_sim_csv, out_path)
        return 0
    except (ScenarioError, BerTableError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
