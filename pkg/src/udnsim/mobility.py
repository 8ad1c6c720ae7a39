"""Straight-line TU trajectory sampled at tic boundaries.

The TU moves from start toward end at constant speed and parks at the end
point if it arrives before the run is over, so per-run KPI denominators
stay uniform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_DURATION_TICS = 7000
DEFAULT_TIC_MS = 10.0

# Built-in routes: (start, end). Case A runs the diagonal at a 135 degree
# heading, Case B runs straight west along y = 500.
CASE_ROUTES: dict[str, tuple[tuple[float, float], tuple[float, float]]] = {
    "A": ((1000.0, 0.0), (0.0, 1000.0)),
    "B": ((1000.0, 500.0), (0.0, 500.0)),
}


@dataclass(frozen=True)
class Route:
    start: tuple[float, float]
    end: tuple[float, float]
    velocity_kmh: float
    duration_tics: int = DEFAULT_DURATION_TICS
    tic_ms: float = DEFAULT_TIC_MS

    def __post_init__(self):
        if self.velocity_kmh <= 0:
            raise ValueError(f"velocity must be positive, got {self.velocity_kmh}")
        if self.duration_tics < 1 or self.tic_ms <= 0:
            raise ValueError("duration_tics must be >= 1 and tic_ms positive")

    @property
    def length_m(self) -> float:
        dx = self.end[0] - self.start[0]
        dy = self.end[1] - self.start[1]
        return math.sqrt(dx * dx + dy * dy)

    @property
    def unit(self) -> tuple[float, float]:
        length = self.length_m
        if length == 0.0:
            return 0.0, 0.0
        return (self.end[0] - self.start[0]) / length, (self.end[1] - self.start[1]) / length

    @property
    def theta_deg(self) -> float:
        """Heading of (end - start) in degrees, in [0, 360)."""
        theta = math.degrees(math.atan2(self.end[1] - self.start[1], self.end[0] - self.start[0]))
        return theta + 360.0 if theta < 0 else theta

    @property
    def step_m(self) -> float:
        """Meters advanced per tic."""
        return (self.velocity_kmh / 3.6) * (self.tic_ms / 1000.0)


def route_for_case(
    case: str,
    velocity_kmh: float,
    duration_tics: int = DEFAULT_DURATION_TICS,
    tic_ms: float = DEFAULT_TIC_MS,
) -> Route:
    key = case.upper()
    if key not in CASE_ROUTES:
        raise ValueError(f"unknown route case {case!r}, expected one of {sorted(CASE_ROUTES)}")
    start, end = CASE_ROUTES[key]
    return Route(start, end, velocity_kmh, duration_tics, tic_ms)


def position_at(route: Route, tic: int) -> tuple[float, float]:
    """TU position at a tic boundary; the TU halts once the end point is reached."""
    if tic < 0 or tic > route.duration_tics:
        raise ValueError(f"tic {tic} outside [0, {route.duration_tics}]")
    dist = tic * route.step_m
    length = route.length_m
    if dist > length:
        dist = length
    ux, uy = route.unit
    return route.start[0] + ux * dist, route.start[1] + uy * dist
