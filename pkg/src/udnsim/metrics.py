"""Per-run and aggregate KPIs.

Two KPIs: the handover rate (mean completed handovers per run) and the
average best-SINR recorded at handover completions, pooled over every
event of every replicate. An aggregate with a rate below 1 is flagged as
a handover failure; a scenario with no events at all reports nan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass
class RunResult:
    case: str
    den_gnb: int
    ttt_tics: int
    velocity_kmh: int
    replicate: int
    seed: int
    ho_times: int
    ho_event_sinrs: list[float] = field(default_factory=list)
    outage_tics: int = 0
    mean_serving_sinr_db: float = math.nan

    def __post_init__(self):
        if len(self.ho_event_sinrs) != self.ho_times:
            raise ValueError(
                f"ho_event_sinrs has {len(self.ho_event_sinrs)} entries for ho_times={self.ho_times}"
            )

    @property
    def ho_avg_sinr_db(self) -> float:
        if not self.ho_event_sinrs:
            return math.nan
        return sum(self.ho_event_sinrs) / len(self.ho_event_sinrs)


@dataclass
class AggregateRow:
    case: str
    den_gnb: int
    ttt_tics: int
    velocity_kmh: int
    replicates: int
    mean_ho_rate: float
    ho_avg_sinr_db: float
    failure_flag: bool


def handover_rate(results: list[RunResult]) -> float:
    """Mean ho_times over replicates; exact because the counts are integers."""
    if not results:
        raise ValueError("handover_rate needs at least one run")
    total = 0
    for r in results:
        total += r.ho_times
    return total / len(results)


def ho_avg_sinr(results: list[RunResult]) -> float:
    """Pooled mean of every handover event SINR across replicates; nan when no events."""
    total = 0.0
    count = 0
    for r in results:
        for s in r.ho_event_sinrs:
            total += s
            count += 1
    if count == 0:
        return math.nan
    return total / count


def aggregate_scenario(results: list[RunResult]) -> AggregateRow:
    """Fold one scenario's replicates into an AggregateRow."""
    if not results:
        raise ValueError("cannot aggregate an empty scenario")
    first = results[0]
    for r in results:
        if (r.case, r.den_gnb, r.ttt_tics, r.velocity_kmh) != (
            first.case,
            first.den_gnb,
            first.ttt_tics,
            first.velocity_kmh,
        ):
            raise ValueError("aggregate_scenario got runs from different scenarios")
    rate = handover_rate(results)
    return AggregateRow(
        case=first.case,
        den_gnb=first.den_gnb,
        ttt_tics=first.ttt_tics,
        velocity_kmh=first.velocity_kmh,
        replicates=len(results),
        mean_ho_rate=rate,
        ho_avg_sinr_db=ho_avg_sinr(results),
        failure_flag=rate < 1.0,
    )
