"""udnsim: downlink system-level simulator for 5G UDN handover studies."""

from ._version import __version__
from .deployment import Arena, GnbSet, deploy_gnbs
from .errors import ConfigError, OutOfCoverageError
from .handover import HandoverEvent, HandoverParams, HandoverState, avg_sinr, step
from .kernel import BACKEND
from .metrics import AggregateRow, RunResult, aggregate_scenario, handover_rate, ho_avg_sinr
from .mobility import Route, position_at, route_for_case
from .radio import (
    LinkSample,
    RadioParams,
    best_sinr,
    measure_link,
    noise_power_dbm,
    pathloss_db,
    received_power_dbm,
    sinr_db,
)
from .runner import (
    ScenarioConfig,
    SweepResult,
    default_study_grid,
    read_sweep,
    run_single,
    run_sweep,
    write_csv,
)

__all__ = [
    "__version__",
    "BACKEND",
    "Arena",
    "GnbSet",
    "deploy_gnbs",
    "ConfigError",
    "OutOfCoverageError",
    "RadioParams",
    "LinkSample",
    "pathloss_db",
    "noise_power_dbm",
    "received_power_dbm",
    "sinr_db",
    "best_sinr",
    "measure_link",
    "Route",
    "route_for_case",
    "position_at",
    "HandoverParams",
    "HandoverState",
    "HandoverEvent",
    "avg_sinr",
    "step",
    "RunResult",
    "AggregateRow",
    "handover_rate",
    "ho_avg_sinr",
    "aggregate_scenario",
    "ScenarioConfig",
    "SweepResult",
    "run_single",
    "run_sweep",
    "write_csv",
    "read_sweep",
    "default_study_grid",
]
