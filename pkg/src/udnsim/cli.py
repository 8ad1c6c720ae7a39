"""Command-line front end.

  udnsim simulate --case A --density 10 --ttt 1 --velocity 50 --out results/
  udnsim sweep --out results/ [--config sim.ini] [--ttt 1-12] ...

simulate runs a single scenario; sweep runs a scenario grid (the full
study grid unless axes are restricted). Both write aggregate.csv and
runs.csv into --out. Exit codes: 0 success, 2 configuration error,
1 runtime error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import ConfigError
from .kernel import BACKEND
from .runner import ScenarioConfig, build_grid, run_sweep, write_csv
from .simconfig import SweepSettings, _parse_int_list, grid_from_settings, load_config


def _add_common_flags(sub):
    sub.add_argument("--config", metavar="PATH", help="INI config file")
    sub.add_argument("--replicates", type=int, help="Monte Carlo replicates per scenario")
    sub.add_argument("--seed", type=int, help="master seed")
    sub.add_argument("--out", metavar="DIR", default="results", help="output directory")
    sub.add_argument("--parallelism", type=int, help="worker processes (default: all cores)")
    sub.add_argument(
        "--fixed-topology",
        action="store_true",
        default=None,
        help="reuse one gNB layout across replicates instead of redrawing",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udnsim",
        description="Downlink system-level simulator for 5G UDN handover studies",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run a single scenario")
    sim.add_argument("--case", default=None, help="route case (A or B)")
    sim.add_argument("--density", type=int, default=None, help="gNBs per km^2")
    sim.add_argument("--ttt", type=int, default=None, help="time-to-trigger in tics")
    sim.add_argument("--velocity", type=int, default=None, help="TU speed in km/h")
    _add_common_flags(sim)

    swp = sub.add_parser("sweep", help="run a scenario grid")
    swp.add_argument("--case", default=None, help="comma list of cases (default A,B)")
    swp.add_argument("--density", default=None, help="densities, e.g. 10,20 or 10-50")
    swp.add_argument("--ttt", default=None, help="TTT values, e.g. 1-12")
    swp.add_argument("--velocity", default=None, help="velocities, e.g. 10,30,50")
    _add_common_flags(swp)
    return parser


def _settings_from(args) -> SweepSettings:
    settings = load_config(args.config) if args.config else SweepSettings()
    if args.replicates is not None:
        settings.replicates = args.replicates
    if args.seed is not None:
        settings.master_seed = args.seed
    if args.parallelism is not None:
        settings.parallelism = args.parallelism
    if args.fixed_topology is not None:
        settings.fixed_topology = args.fixed_topology
    return settings


def _grid_for_simulate(args, settings: SweepSettings):
    single = {}
    if args.case is not None:
        single["case"] = args.case.upper()
    if args.density is not None:
        single["den_gnb"] = args.density
    if args.ttt is not None:
        single["ttt_tics"] = args.ttt
    if args.velocity is not None:
        single["velocity_kmh"] = args.velocity
    common = dict(settings.overrides)
    if settings.replicates is not None:
        common["replicates"] = settings.replicates
    if settings.master_seed is not None:
        common["master_seed"] = settings.master_seed
    if settings.fixed_topology is not None:
        common["fixed_topology"] = settings.fixed_topology
    return [ScenarioConfig(**common, **single)]


def _grid_for_sweep(args, settings: SweepSettings):
    if args.case is not None:
        settings.cases = [p.strip().upper() for p in args.case.split(",") if p.strip()]
    if args.density is not None:
        settings.densities = _parse_int_list(args.density, "--density")
    if args.ttt is not None:
        settings.ttts = _parse_int_list(args.ttt, "--ttt")
    if args.velocity is not None:
        settings.velocities = _parse_int_list(args.velocity, "--velocity")
    return grid_from_settings(settings)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _settings_from(args)
        if args.command == "simulate":
            grid = _grid_for_simulate(args, settings)
        else:
            grid = _grid_for_sweep(args, settings)
        parallelism = settings.parallelism or os.cpu_count() or 1
        result = run_sweep(grid, parallelism=parallelism)
        agg_path, runs_path = write_csv(result, args.out)
    except ConfigError as exc:
        print(f"udnsim: configuration error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"udnsim: error: {exc}", file=sys.stderr)
        return 1

    print(f"backend={BACKEND} scenarios={len(result.rows)} runs={len(result.runs)}")
    for row in result.rows[:10]:
        flag = " FAILURE" if row.failure_flag else ""
        print(
            f"  case={row.case} den={row.den_gnb} ttt={row.ttt_tics} v={row.velocity_kmh}: "
            f"rate={row.mean_ho_rate:.4f} ho_avg_sinr={row.ho_avg_sinr_db:.4f} dB{flag}"
        )
    if len(result.rows) > 10:
        print(f"  ... {len(result.rows) - 10} more rows")
    print(f"wrote {agg_path} and {runs_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
