"""Downlink link budget and per-tic SINR measurements.

All absolute powers are dBm; linear-domain arithmetic is in milliwatt.
A gNB takes part in a measurement (as candidate or as interferer) only
while the TU is inside its coverage radius; everything further away
contributes nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .deployment import GnbSet
from .errors import OutOfCoverageError

# Urban macro distance model, d in kilometers. The carrier frequency is
# carried as metadata only: this model has no frequency or height term.
PATHLOSS_OFFSET_DB = 128.1
PATHLOSS_SLOPE_DB = 37.6
MIN_PATHLOSS_DISTANCE_M = 1.0

THERMAL_NOISE_DBM_PER_HZ = -174.0


@dataclass(frozen=True)
class RadioParams:
    carrier_freq_ghz: float = 6.0
    bandwidth_hz: float = 10e6
    noise_figure_db: float = 7.0
    rx_antenna_gain_dbi: float = 0.0
    shadowing_sigma_db: float = 0.0

    def __post_init__(self):
        if not self.bandwidth_hz > 0:
            raise ValueError(f"bandwidth_hz must be positive, got {self.bandwidth_hz}")
        if self.noise_figure_db < 0:
            raise ValueError(f"noise_figure_db must be >= 0, got {self.noise_figure_db}")
        if self.shadowing_sigma_db < 0:
            raise ValueError(f"shadowing_sigma_db must be >= 0, got {self.shadowing_sigma_db}")


@dataclass(frozen=True)
class LinkSample:
    """One tic of radio measurements.

    serving_sinr_db is None when the serving gNB is unreachable (or there
    is no serving gNB); best_gnb is None iff no gNB is reachable at all.
    """

    tic: int
    serving_sinr_db: float | None
    best_gnb: int | None
    best_sinr_db: float | None


def dbm_to_mw(p_dbm: float) -> float:
    return 10.0 ** (p_dbm / 10.0)


def mw_to_dbm(p_mw: float) -> float:
    return 10.0 * math.log10(p_mw)


def pathloss_db(distance_m: float) -> float:
    """Distance-only urban macro pathloss; distances under 1 m are clamped."""
    if distance_m <= 0:
        raise ValueError(f"distance must be positive, got {distance_m}")
    d = distance_m if distance_m >= MIN_PATHLOSS_DISTANCE_M else MIN_PATHLOSS_DISTANCE_M
    return PATHLOSS_OFFSET_DB + PATHLOSS_SLOPE_DB * math.log10(d / 1000.0)


def noise_power_dbm(params: RadioParams) -> float:
    """Thermal noise over the configured bandwidth plus the receiver noise figure."""
    return THERMAL_NOISE_DBM_PER_HZ + 10.0 * math.log10(params.bandwidth_hz) + params.noise_figure_db


def received_power_dbm(
    gnbs: GnbSet,
    gnb_id: int,
    tu_pos: tuple[float, float],
    params: RadioParams,
    rng: np.random.Generator | None = None,
) -> float:
    """Link budget for one gNB: EIRP minus pathloss minus a shadowing draw.

    No randomness is consumed when shadowing is off (sigma == 0).
    """
    gx, gy = gnbs.position(gnb_id)
    dx = gx - tu_pos[0]
    dy = gy - tu_pos[1]
    d = math.sqrt(dx * dx + dy * dy)
    shadow = 0.0
    if params.shadowing_sigma_db > 0:
        if rng is None:
            raise ValueError("shadowing enabled but no rng supplied")
        shadow = float(rng.normal(0.0, params.shadowing_sigma_db))
    eirp = gnbs.tx_power_dbm + gnbs.antenna_gain_dbi + params.rx_antenna_gain_dbi
    return eirp - pathloss_db(d) - shadow


def reachable_ids(gnbs: GnbSet, tu_pos: tuple[float, float]) -> list[int]:
    """Ids of all gNBs whose coverage disc contains the TU, ascending."""
    cov2 = gnbs.coverage_m * gnbs.coverage_m
    out = []
    for g in range(len(gnbs)):
        dx = float(gnbs.xs[g]) - tu_pos[0]
        dy = float(gnbs.ys[g]) - tu_pos[1]
        if dx * dx + dy * dy <= cov2:
            out.append(g)
    return out


def _reachable_powers_mw(
    gnbs: GnbSet,
    tu_pos: tuple[float, float],
    params: RadioParams,
    rng: np.random.Generator | None,
    shadow_db=None,
) -> dict[int, float]:
    """One received power per reachable gNB, drawn in id order.

    shadow_db, when given, is a per-gNB array of shadowing values in dB and
    replaces fresh rng draws (used to replay a precomputed fading trace).
    """
    powers: dict[int, float] = {}
    eirp = gnbs.tx_power_dbm + gnbs.antenna_gain_dbi + params.rx_antenna_gain_dbi
    cov2 = gnbs.coverage_m * gnbs.coverage_m
    for g in range(len(gnbs)):
        dx = float(gnbs.xs[g]) - tu_pos[0]
        dy = float(gnbs.ys[g]) - tu_pos[1]
        d2 = dx * dx + dy * dy
        if d2 > cov2:
            continue
        shadow = 0.0
        if shadow_db is not None:
            shadow = float(shadow_db[g])
        elif params.shadowing_sigma_db > 0:
            if rng is None:
                raise ValueError("shadowing enabled but no rng supplied")
            shadow = float(rng.normal(0.0, params.shadowing_sigma_db))
        p_dbm = eirp - pathloss_db(math.sqrt(d2)) - shadow
        powers[g] = dbm_to_mw(p_dbm)
    return powers


def sinr_db(
    tu_pos: tuple[float, float],
    serving: int,
    gnbs: GnbSet,
    params: RadioParams,
    rng: np.random.Generator | None = None,
) -> float:
    """SINR w.r.t. the serving gNB; interference from the other reachable gNBs."""
    powers = _reachable_powers_mw(gnbs, tu_pos, params, rng)
    if serving not in powers:
        raise OutOfCoverageError(f"gNB {serving} is not reachable from {tu_pos}")
    return _candidate_sinr_db(powers, serving, dbm_to_mw(noise_power_dbm(params)))


def best_sinr(
    tu_pos: tuple[float, float],
    gnbs: GnbSet,
    params: RadioParams,
    rng: np.random.Generator | None = None,
) -> tuple[int | None, float]:
    """Best candidate SINR over all reachable gNBs.

    Each candidate is scored as if it were serving, with every other
    reachable gNB as an interferer; a single shadowing draw per gNB is
    shared across the candidate evaluations. Ties go to the lowest id.
    Returns (None, nan) when nothing is reachable.
    """
    powers = _reachable_powers_mw(gnbs, tu_pos, params, rng)
    if not powers:
        return None, math.nan
    noise_mw = dbm_to_mw(noise_power_dbm(params))
    best_id = None
    best_db = -math.inf
    for g in sorted(powers):
        cand_db = _candidate_sinr_db(powers, g, noise_mw)
        if cand_db > best_db:
            best_db = cand_db
            best_id = g
    return best_id, best_db


def _candidate_sinr_db(powers: dict[int, float], serving: int, noise_mw: float) -> float:
    interference = 0.0
    for g, p in powers.items():
        if g != serving:
            interference += p
    return 10.0 * math.log10(powers[serving] / (interference + noise_mw))


def measure_link(
    tic: int,
    tu_pos: tuple[float, float],
    serving: int | None,
    gnbs: GnbSet,
    params: RadioParams,
    shadow_db=None,
) -> LinkSample:
    """Full per-tic measurement: serving SINR plus the best candidate.

    This is the readable reference path mirrored by the fused kernels; one
    shadowing value per gNB (from shadow_db) is shared by all quantities.
    """
    powers = _reachable_powers_mw(gnbs, tu_pos, params, rng=None, shadow_db=shadow_db)
    if not powers:
        return LinkSample(tic, None, None, None)
    noise_mw = dbm_to_mw(noise_power_dbm(params))
    serving_db = None
    if serving is not None and serving in powers:
        serving_db = _candidate_sinr_db(powers, serving, noise_mw)
    best_id = None
    best_db = -math.inf
    for g in sorted(powers):
        cand_db = _candidate_sinr_db(powers, g, noise_mw)
        if cand_db > best_db:
            best_db = cand_db
            best_id = g
    return LinkSample(tic, serving_db, best_id, best_db)
