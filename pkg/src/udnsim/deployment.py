"""gNB placement over the simulation arena.

Deployments are binomial point process realizations: a fixed number of
sites dropped i.i.d. uniformly over the arena, which is a Poisson point
process conditioned on its count. Densities are therefore exact per
square kilometer of the default 1000 m x 1000 m arena.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError

DEFAULT_COVERAGE_M = 300.0
DEFAULT_TX_POWER_DBM = 30.0
DEFAULT_ANTENNA_GAIN_DBI = 15.0
DEFAULT_GNB_HEIGHT_M = 15.0


@dataclass(frozen=True)
class Arena:
    """Rectangular simulation area, origin at the south-west corner."""

    width_m: float = 1000.0
    height_m: float = 1000.0

    def __post_init__(self):
        if not (self.width_m > 0 and self.height_m > 0):
            raise ConfigError(f"arena sides must be positive, got {self.width_m} x {self.height_m}")


@dataclass
class GnbSet:
    """Positions plus shared radio parameters of all deployed gNBs.

    gNB ids are the array indices, contiguous from 0. The antenna height is
    carried for completeness but the distance-only pathloss model ignores it.
    """

    xs: np.ndarray
    ys: np.ndarray
    coverage_m: float = DEFAULT_COVERAGE_M
    tx_power_dbm: float = DEFAULT_TX_POWER_DBM
    antenna_gain_dbi: float = DEFAULT_ANTENNA_GAIN_DBI
    height_m: float = DEFAULT_GNB_HEIGHT_M

    def __post_init__(self):
        self.xs = np.ascontiguousarray(self.xs, dtype=np.float64)
        self.ys = np.ascontiguousarray(self.ys, dtype=np.float64)
        if self.xs.shape != self.ys.shape or self.xs.ndim != 1:
            raise ConfigError("xs and ys must be 1-D arrays of equal length")

    def __len__(self) -> int:
        return self.xs.shape[0]

    @property
    def gnbs(self) -> list[tuple[int, tuple[float, float]]]:
        """Ordered (id, position) pairs."""
        return [(i, (float(self.xs[i]), float(self.ys[i]))) for i in range(len(self))]

    def position(self, gnb_id: int) -> tuple[float, float]:
        return float(self.xs[gnb_id]), float(self.ys[gnb_id])


def deploy_gnbs(
    arena: Arena,
    den_gnb: int,
    rng: np.random.Generator,
    *,
    coverage_m: float = DEFAULT_COVERAGE_M,
    tx_power_dbm: float = DEFAULT_TX_POWER_DBM,
    antenna_gain_dbi: float = DEFAULT_ANTENNA_GAIN_DBI,
    height_m: float = DEFAULT_GNB_HEIGHT_M,
) -> GnbSet:
    """Drop den_gnb sites i.i.d. uniformly over the arena.

    Deterministic given the generator state; a run with zero gNBs is
    rejected because it cannot serve anything.
    """
    if den_gnb < 1:
        raise ConfigError(f"den_gnb must be >= 1, got {den_gnb}")
    pts = rng.random((den_gnb, 2))
    return GnbSet(
        xs=pts[:, 0] * arena.width_m,
        ys=pts[:, 1] * arena.height_m,
        coverage_m=coverage_m,
        tx_power_dbm=tx_power_dbm,
        antenna_gain_dbi=antenna_gain_dbi,
        height_m=height_m,
    )
