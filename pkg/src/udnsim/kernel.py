"""Tic-loop kernel selection.

The compiled extension is preferred when importable; otherwise the
pure-Python mirror is used. UDNSIM_BACKEND=py or =c forces the choice
(=c raises if the extension is missing, rather than silently degrading).

simulate_run(gx, gy, cio, n_tics, x0, y0, ux, uy, step_m, length_m,
             coverage_m, lin_const, noise_mw, sinr_min_db, hys_db,
             ttt_tics, exec_hold_tics, window_len, measure_during_exec,
             shadow_lin=None)
  -> (ho_times, event_tics, event_from, event_to, event_sinr_db,
      outage_tics, serving_sinr_sum, serving_sinr_count)

Inputs: gNB coordinates and per-gNB CIO arrays; route origin, unit
direction, per-tic step and total length; the linear-domain link-budget
constant 10**((EIRP - 128.1)/10); noise power in mW; trigger thresholds;
and optionally an (n_tics, n_gnb) array of linear shadowing factors.
"""

from __future__ import annotations

import os

from . import _kernel_py

_requested = os.environ.get("UDNSIM_BACKEND", "").strip().lower()

if _requested == "py":
    _impl = _kernel_py
    BACKEND = "py"
elif _requested == "c":
    from . import _kernel as _impl  # noqa: F401  (ImportError is the intended failure)

    BACKEND = "c"
elif _requested == "":
    try:
        from . import _kernel as _impl

        BACKEND = "c"
    except ImportError:
        _impl = _kernel_py
        BACKEND = "py"
else:
    raise RuntimeError(f"UDNSIM_BACKEND must be 'c' or 'py', got {_requested!r}")

simulate_run = _impl.simulate_run


def available_backends() -> list[str]:
    """Backends importable in this environment (for benchmarks/tests)."""
    out = ["py"]
    try:
        from . import _kernel  # noqa: F401

        out.insert(0, "c")
    except ImportError:
        pass
    return out


def get_backend(name: str):
    """Return a specific backend's simulate_run (used by the benchmark)."""
    if name == "py":
        return _kernel_py.simulate_run
    if name == "c":
        from . import _kernel

        return _kernel.simulate_run
    raise ValueError(f"unknown backend {name!r}")
