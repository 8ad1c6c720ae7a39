"""Scenario orchestration: single runs, Monte Carlo sweeps, CSV persistence.

Every run is reproducible from (master_seed, scenario labels, replicate):
per-run streams are derived by stable hashing, so results are independent
of execution order and parallelism, and replicates never share randomness.
"""

from __future__ import annotations

import hashlib
import json
import math
import multiprocessing
import os
from dataclasses import asdict, dataclass, field

import numpy as np

from . import kernel, radio
from ._version import __version__
from .deployment import Arena, deploy_gnbs
from .errors import ConfigError
from .handover import HandoverParams
from .metrics import AggregateRow, RunResult, aggregate_scenario
from .mobility import CASE_ROUTES, Route, route_for_case
from .radio import RadioParams

# Shadowing applied by the default study scenarios. The radio layer keeps
# sigma = 0 unless asked; without per-tic measurement noise the A3 margin
# is smooth along the route and the TTT axis is inert. Calibrated so the
# TTT=1 handover rates land on the reference anchors (about 4 per run at
# 10 gNB/km^2 and about 9 at 50, Case A/B at 50 km/h).
DEFAULT_SHADOWING_SIGMA_DB = 1.0

STUDY_CASES = ("A", "B")
STUDY_DENSITIES = (10, 20, 30, 40, 50)
STUDY_TTTS = tuple(range(1, 13))
STUDY_VELOCITIES = (10, 20, 30, 40, 50)

AGGREGATE_COLUMNS = (
    "case,den_gnb,ttt_tics,velocity_kmh,replicates,mean_ho_rate,ho_avg_sinr_db,failure_flag"
)
RUNS_COLUMNS = (
    "case,den_gnb,ttt_tics,velocity_kmh,replicate,seed,ho_times,ho_avg_sinr_db,"
    "outage_tics,mean_serving_sinr_db"
)


@dataclass
class ScenarioConfig:
    """One scenario point plus all physical/protocol parameter overrides."""

    case: str = "A"
    den_gnb: int = 10
    ttt_tics: int = 1
    velocity_kmh: int = 50
    replicates: int = 100
    master_seed: int = 42
    # arena
    arena_width_m: float = 1000.0
    arena_height_m: float = 1000.0
    # gNB site
    coverage_m: float = 300.0
    tx_power_dbm: float = 30.0
    antenna_gain_dbi: float = 15.0
    gnb_height_m: float = 15.0
    # radio
    carrier_freq_ghz: float = 6.0
    bandwidth_hz: float = 10e6
    noise_figure_db: float = 7.0
    rx_antenna_gain_dbi: float = 0.0
    shadowing_sigma_db: float = DEFAULT_SHADOWING_SIGMA_DB
    # handover
    ho_hys_db: float = 3.0
    sinr_min_db: float = -7.0
    exec_hold_tics: int = 25
    window_len: int = 10
    cio_db: float = 0.0
    measure_during_exec: bool = False
    # mobility
    duration_tics: int = 7000
    tic_ms: float = 10.0
    route_start: tuple[float, float] | None = None
    route_end: tuple[float, float] | None = None
    # sweep behaviour
    fixed_topology: bool = False

    def validate(self):
        problems = []
        if self.den_gnb < 1:
            problems.append(f"den_gnb must be >= 1, got {self.den_gnb}")
        if self.ttt_tics < 1:
            problems.append(f"ttt_tics must be >= 1, got {self.ttt_tics}")
        if self.velocity_kmh <= 0:
            problems.append(f"velocity_kmh must be positive, got {self.velocity_kmh}")
        if self.replicates < 1:
            problems.append(f"replicates must be >= 1, got {self.replicates}")
        if self.arena_width_m <= 0 or self.arena_height_m <= 0:
            problems.append("arena sides must be positive")
        if self.coverage_m <= 0:
            problems.append(f"coverage_m must be positive, got {self.coverage_m}")
        if self.bandwidth_hz <= 0:
            problems.append(f"bandwidth_hz must be positive, got {self.bandwidth_hz}")
        if self.noise_figure_db < 0:
            problems.append(f"noise_figure_db must be >= 0, got {self.noise_figure_db}")
        if self.shadowing_sigma_db < 0:
            problems.append(f"shadowing_sigma_db must be >= 0, got {self.shadowing_sigma_db}")
        if self.exec_hold_tics < 0:
            problems.append(f"exec_hold_tics must be >= 0, got {self.exec_hold_tics}")
        if self.window_len < 1:
            problems.append(f"window_len must be >= 1, got {self.window_len}")
        if self.duration_tics < 1:
            problems.append(f"duration_tics must be >= 1, got {self.duration_tics}")
        if self.tic_ms <= 0:
            problems.append(f"tic_ms must be positive, got {self.tic_ms}")
        if self.case.upper() not in CASE_ROUTES and (self.route_start is None or self.route_end is None):
            problems.append(
                f"case {self.case!r} has no built-in route; set route_start and route_end"
            )
        if problems:
            raise ConfigError("; ".join(problems))

    # -- derived parameter objects -------------------------------------

    def arena(self) -> Arena:
        return Arena(self.arena_width_m, self.arena_height_m)

    def radio_params(self) -> RadioParams:
        return RadioParams(
            carrier_freq_ghz=self.carrier_freq_ghz,
            bandwidth_hz=self.bandwidth_hz,
            noise_figure_db=self.noise_figure_db,
            rx_antenna_gain_dbi=self.rx_antenna_gain_dbi,
            shadowing_sigma_db=self.shadowing_sigma_db,
        )

    def handover_params(self) -> HandoverParams:
        return HandoverParams(
            ttt_tics=self.ttt_tics,
            ho_hys_db=self.ho_hys_db,
            sinr_min_db=self.sinr_min_db,
            exec_hold_tics=self.exec_hold_tics,
            window_len=self.window_len,
            cio_default_db=self.cio_db,
            measure_during_exec=self.measure_during_exec,
        )

    def route(self) -> Route:
        if self.case.upper() in CASE_ROUTES and self.route_start is None:
            return route_for_case(self.case, self.velocity_kmh, self.duration_tics, self.tic_ms)
        return Route(
            tuple(self.route_start),
            tuple(self.route_end),
            self.velocity_kmh,
            self.duration_tics,
            self.tic_ms,
        )

    def labels(self) -> tuple:
        return (self.case, self.den_gnb, self.ttt_tics, self.velocity_kmh)


@dataclass
class RunRow:
    """One runs.csv record (what survives the CSV round trip)."""

    case: str
    den_gnb: int
    ttt_tics: int
    velocity_kmh: int
    replicate: int
    seed: int
    ho_times: int
    ho_avg_sinr_db: float
    outage_tics: int
    mean_serving_sinr_db: float


@dataclass
class SweepResult:
    rows: list[AggregateRow]
    runs: list  # RunResult (fresh sweep) or RunRow (parsed back)
    provenance: dict = field(default_factory=dict)


# -- seeding ------------------------------------------------------------


def _hash64(*parts) -> int:
    """Stable 64-bit hash of the given parts (reproducible across runs)."""
    text = "|".join(str(p) for p in parts)
    return int.from_bytes(hashlib.blake2b(text.encode(), digest_size=8).digest(), "little")


def run_seed(config: ScenarioConfig, replicate: int) -> int:
    return _hash64(config.master_seed, *config.labels(), replicate, "run")


def _deploy_seed(config: ScenarioConfig, replicate: int) -> int:
    if config.fixed_topology:
        return _hash64(config.master_seed, *config.labels(), "deploy")
    return _hash64(config.master_seed, *config.labels(), replicate, "deploy")


def _shadow_seed(config: ScenarioConfig, replicate: int) -> int:
    return _hash64(config.master_seed, *config.labels(), replicate, "shadow")


# -- execution ----------------------------------------------------------


def run_single(config: ScenarioConfig, replicate: int) -> RunResult:
    """Simulate one replicate: deploy, attach, and advance the full tic loop."""
    config.validate()
    if replicate < 0:
        raise ConfigError(f"replicate must be >= 0, got {replicate}")

    gnbs = deploy_gnbs(
        config.arena(),
        config.den_gnb,
        np.random.default_rng(_deploy_seed(config, replicate)),
        coverage_m=config.coverage_m,
        tx_power_dbm=config.tx_power_dbm,
        antenna_gain_dbi=config.antenna_gain_dbi,
        height_m=config.gnb_height_m,
    )
    route = config.route()

    shadow_lin = None
    if config.shadowing_sigma_db > 0:
        rng = np.random.default_rng(_shadow_seed(config, replicate))
        shadow_lin = rng.standard_normal((config.duration_tics, config.den_gnb))
        # dB draw -> linear power factor 10**(-s/10), computed in place
        shadow_lin *= config.shadowing_sigma_db * (-0.1 * math.log(10.0))
        np.exp(shadow_lin, out=shadow_lin)

    eirp = gnbs.tx_power_dbm + gnbs.antenna_gain_dbi + config.rx_antenna_gain_dbi
    lin_const = 10.0 ** ((eirp - radio.PATHLOSS_OFFSET_DB) / 10.0)
    noise_mw = radio.dbm_to_mw(radio.noise_power_dbm(config.radio_params()))
    cio = np.full(config.den_gnb, config.cio_db, dtype=np.float64)
    ux, uy = route.unit

    (ho_times, _ev_tics, _ev_from, _ev_to, ev_sinr, outage, ssum, scount) = kernel.simulate_run(
        gnbs.xs,
        gnbs.ys,
        cio,
        config.duration_tics,
        route.start[0],
        route.start[1],
        ux,
        uy,
        route.step_m,
        route.length_m,
        config.coverage_m,
        lin_const,
        noise_mw,
        config.sinr_min_db,
        config.ho_hys_db,
        config.ttt_tics,
        config.exec_hold_tics,
        config.window_len,
        config.measure_during_exec,
        shadow_lin,
    )

    return RunResult(
        case=config.case,
        den_gnb=config.den_gnb,
        ttt_tics=config.ttt_tics,
        velocity_kmh=config.velocity_kmh,
        replicate=replicate,
        seed=run_seed(config, replicate),
        ho_times=ho_times,
        ho_event_sinrs=list(ev_sinr),
        outage_tics=outage,
        mean_serving_sinr_db=(ssum / scount) if scount else math.nan,
    )


def _run_scenario(config: ScenarioConfig) -> tuple[AggregateRow, list[RunResult]]:
    try:
        results = [run_single(config, rep) for rep in range(config.replicates)]
        return aggregate_scenario(results), results
    except ConfigError:
        raise
    except Exception as exc:
        raise RuntimeError(f"scenario {config.labels()} failed: {exc}") from exc


def run_sweep(grid, parallelism: int = 1) -> SweepResult:
    """Evaluate every scenario x replicate; output is independent of parallelism."""
    if isinstance(grid, ScenarioConfig):
        grid = [grid]
    grid = list(grid)
    if not grid:
        raise ConfigError("sweep grid is empty")
    if parallelism < 1:
        raise ConfigError(f"parallelism must be >= 1, got {parallelism}")
    for config in grid:
        config.validate()

    if parallelism == 1 or len(grid) == 1:
        outcomes = [_run_scenario(c) for c in grid]
    else:
        chunksize = max(1, len(grid) // (parallelism * 4))
        with multiprocessing.Pool(parallelism) as pool:
            outcomes = pool.map(_run_scenario, grid, chunksize=chunksize)

    rows = [row for row, _ in outcomes]
    runs = [r for _, results in outcomes for r in results]
    provenance = {
        "master_seed": grid[0].master_seed,
        "config_digest": config_digest(grid),
        "tool_version": __version__,
    }
    return SweepResult(rows=rows, runs=runs, provenance=provenance)


def config_digest(grid) -> str:
    """Stable digest of the full grid configuration."""
    canon = json.dumps([asdict(c) for c in grid], sort_keys=True, default=list)
    return hashlib.sha256(canon.encode()).hexdigest()[:16]


# -- grids --------------------------------------------------------------


def build_grid(
    cases=STUDY_CASES,
    densities=STUDY_DENSITIES,
    ttts=STUDY_TTTS,
    velocities=STUDY_VELOCITIES,
    **common,
) -> list[ScenarioConfig]:
    """Cartesian scenario grid in fixed (case, density, ttt, velocity) order."""
    grid = []
    for case in cases:
        for den in densities:
            for ttt in ttts:
                for vel in velocities:
                    grid.append(
                        ScenarioConfig(
                            case=case, den_gnb=den, ttt_tics=ttt, velocity_kmh=vel, **common
                        )
                    )
    return grid


def default_study_grid(master_seed: int = 42, replicates: int = 100, **common) -> list[ScenarioConfig]:
    """The full study grid: {A,B} x TTT 1..12 x density 10..50 x velocity 10..50."""
    return build_grid(master_seed=master_seed, replicates=replicates, **common)


# -- CSV persistence ----------------------------------------------------


def _fmt_float(x: float) -> str:
    return f"{x:.4f}"


def _fmt_bool(x: bool) -> str:
    return "true" if x else "false"


def write_csv(result: SweepResult, out_dir) -> tuple[str, str]:
    """Write aggregate.csv and runs.csv (plus provenance.json); returns the csv paths."""
    os.makedirs(out_dir, exist_ok=True)
    agg_path = os.path.join(out_dir, "aggregate.csv")
    runs_path = os.path.join(out_dir, "runs.csv")

    lines = [AGGREGATE_COLUMNS]
    for row in result.rows:
        lines.append(
            f"{row.case},{row.den_gnb},{row.ttt_tics},{row.velocity_kmh},{row.replicates},"
            f"{_fmt_float(row.mean_ho_rate)},{_fmt_float(row.ho_avg_sinr_db)},"
            f"{_fmt_bool(row.failure_flag)}"
        )
    _write_lines(agg_path, lines)

    lines = [RUNS_COLUMNS]
    for run in result.runs:
        lines.append(
            f"{run.case},{run.den_gnb},{run.ttt_tics},{run.velocity_kmh},{run.replicate},"
            f"{run.seed},{run.ho_times},{_fmt_float(run.ho_avg_sinr_db)},{run.outage_tics},"
            f"{_fmt_float(run.mean_serving_sinr_db)}"
        )
    _write_lines(runs_path, lines)

    if result.provenance:
        prov_path = os.path.join(out_dir, "provenance.json")
        try:
            with open(prov_path, "w", encoding="utf-8") as fh:
                json.dump(result.provenance, fh, indent=2, sort_keys=True)
                fh.write("\n")
        except OSError as exc:
            raise OSError(f"cannot write {prov_path}: {exc}") from exc

    return agg_path, runs_path


def _write_lines(path, lines):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def read_aggregate_csv(path) -> list[AggregateRow]:
    rows = []
    for parts in _read_rows(path, AGGREGATE_COLUMNS):
        rows.append(
            AggregateRow(
                case=parts[0],
                den_gnb=int(parts[1]),
                ttt_tics=int(parts[2]),
                velocity_kmh=int(parts[3]),
                replicates=int(parts[4]),
                mean_ho_rate=float(parts[5]),
                ho_avg_sinr_db=float(parts[6]),
                failure_flag=parts[7] == "true",
            )
        )
    return rows


def read_runs_csv(path) -> list[RunRow]:
    runs = []
    for parts in _read_rows(path, RUNS_COLUMNS):
        runs.append(
            RunRow(
                case=parts[0],
                den_gnb=int(parts[1]),
                ttt_tics=int(parts[2]),
                velocity_kmh=int(parts[3]),
                replicate=int(parts[4]),
                seed=int(parts[5]),
                ho_times=int(parts[6]),
                ho_avg_sinr_db=float(parts[7]),
                outage_tics=int(parts[8]),
                mean_serving_sinr_db=float(parts[9]),
            )
        )
    return runs


def read_sweep(out_dir) -> SweepResult:
    """Parse a written sweep back; write_csv(read_sweep(d)) reproduces the bytes."""
    rows = read_aggregate_csv(os.path.join(out_dir, "aggregate.csv"))
    runs = read_runs_csv(os.path.join(out_dir, "runs.csv"))
    provenance = {}
    prov_path = os.path.join(out_dir, "provenance.json")
    if os.path.exists(prov_path):
        with open(prov_path, encoding="utf-8") as fh:
            provenance = json.load(fh)
    return SweepResult(rows=rows, runs=runs, provenance=provenance)


def _read_rows(path, expected_header: str):
    try:
        with open(path, encoding="utf-8") as fh:
            content = fh.read()
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc}") from exc
    lines = content.splitlines()
    if not lines or lines[0] != expected_header:
        raise ConfigError(f"{path}: expected header {expected_header!r}")
    n_cols = expected_header.count(",") + 1
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != n_cols:
            raise ConfigError(f"{path}:{lineno}: expected {n_cols} columns, got {len(parts)}")
        yield parts
