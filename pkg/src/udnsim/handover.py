"""A3-event handover triggering with hysteresis, CIO, TTT, and execution hold.

The state machine advances one tic at a time on LinkSample measurements:

* The trigger compares the instantaneous best candidate SINR against the
  trailing average of the serving SINR (last window_len tics, current tic
  excluded). No trigger decision is possible until that window is full.
* The A3 condition must hold for ttt_tics consecutive tics with one
  consistent target; any failing tic, or a change of best target, restarts
  the count from zero.
* A completed handover switches the serving gNB, starts the execution hold
  and clears the averaging window, which now refers to the new cell. By
  default no window samples accumulate during the hold, so a new trigger
  needs hold + warm-up + TTT tics; set measure_during_exec to let the
  window fill during the hold instead.
* Losing the serving link resets everything and re-attaches to the best
  reachable gNB without counting a handover; a tic with no reachable gNB
  at all counts as outage. Attachment consumes the tic: measurement
  history w.r.t. the new cell starts on the following tic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .radio import LinkSample


@dataclass(frozen=True)
class HandoverParams:
    ttt_tics: int
    ho_hys_db: float = 3.0
    sinr_min_db: float = -7.0
    exec_hold_tics: int = 25
    window_len: int = 10
    cio_default_db: float = 0.0
    cio_overrides: Mapping[int, float] = field(default_factory=dict)
    measure_during_exec: bool = False

    def __post_init__(self):
        if self.ttt_tics < 1:
            raise ValueError(f"ttt_tics must be >= 1, got {self.ttt_tics}")
        if self.exec_hold_tics < 0:
            raise ValueError(f"exec_hold_tics must be >= 0, got {self.exec_hold_tics}")
        if self.window_len < 1:
            raise ValueError(f"window_len must be >= 1, got {self.window_len}")

    def cio_db(self, gnb_id: int) -> float:
        return self.cio_overrides.get(gnb_id, self.cio_default_db)


@dataclass(frozen=True)
class HandoverEvent:
    """A completed handover; best_sinr_db is the target's candidate SINR at the completion tic."""

    tic: int
    from_gnb: int
    to_gnb: int
    best_sinr_db: float


@dataclass
class HandoverState:
    serving_gnb: int | None = None
    ho_timer: int = 0
    ho_trigger: int = 0
    exec_remaining: int = 0
    sinr_window: list[float] = field(default_factory=list)
    pending_target: int | None = None
    ho_times: int = 0
    outage_tics: int = 0
    window_len: int = 10
    # run-long serving-SINR accumulator (KPI only, not part of triggering)
    serving_sinr_sum: float = 0.0
    serving_sinr_count: int = 0

    @classmethod
    def for_params(cls, params: HandoverParams) -> "HandoverState":
        return cls(window_len=params.window_len)


def avg_sinr(state: HandoverState) -> float | None:
    """Trailing serving-SINR average; None until the window holds window_len samples."""
    if len(state.sinr_window) != state.window_len:
        return None
    return sum(state.sinr_window) / state.window_len


def _reset_trigger(state: HandoverState):
    state.ho_timer = 0
    state.ho_trigger = 0
    state.pending_target = None


def step(
    state: HandoverState,
    sample: LinkSample,
    params: HandoverParams,
) -> tuple[HandoverState, HandoverEvent | None]:
    """Advance the state machine by one tic. The state is mutated in place.

    sample.tic must be the successor of the previously processed tic.
    """
    serving = state.serving_gnb
    alive = serving is not None and sample.serving_sinr_db is not None

    if not alive:
        # Serving link lost (or never attached): drop all trigger history
        # and re-attach immediately when any cell is reachable.
        _reset_trigger(state)
        state.sinr_window.clear()
        state.exec_remaining = 0
        if sample.best_gnb is not None:
            state.serving_gnb = sample.best_gnb
        else:
            state.serving_gnb = None
            state.outage_tics += 1
        return state, None

    serving_db = sample.serving_sinr_db
    state.serving_sinr_sum += serving_db
    state.serving_sinr_count += 1

    if state.exec_remaining > 0:
        state.exec_remaining -= 1
        if params.measure_during_exec:
            _push_window(state, serving_db)
        return state, None

    target = sample.best_gnb
    avg = avg_sinr(state)
    condition = (
        target != serving
        and avg is not None
        and sample.best_sinr_db > params.sinr_min_db
        and sample.best_sinr_db - avg + (params.cio_db(target) - params.cio_db(serving)) > params.ho_hys_db
    )

    event = None
    if condition:
        if state.pending_target is None or state.pending_target == target:
            state.pending_target = target
            state.ho_trigger = 1
            state.ho_timer += 1
            if state.ho_timer == params.ttt_tics:
                event = HandoverEvent(sample.tic, serving, target, sample.best_sinr_db)
                state.serving_gnb = target
                state.exec_remaining = params.exec_hold_tics
                state.ho_times += 1
                _reset_trigger(state)
                state.sinr_window.clear()
                # This tic's serving sample was measured w.r.t. the old
                # cell; the window restarts on the next tic.
                return state, event
        else:
            # The best target flipped mid-count: TTT must be satisfied by
            # one consistent target, so restart for the new one.
            state.ho_timer = 0
            state.ho_trigger = 0
            state.pending_target = target
    else:
        _reset_trigger(state)

    _push_window(state, serving_db)
    return state, event


def _push_window(state: HandoverState, serving_db: float):
    state.sinr_window.append(serving_db)
    if len(state.sinr_window) > state.window_len:
        state.sinr_window.pop(0)
