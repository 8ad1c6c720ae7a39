"""Pure-Python tic-loop kernel.

Fallback for environments without the compiled extension. Arithmetic is
kept operation-for-operation identical to _kernel.pyx (same expression
forms, same accumulation order, libm via the float builtins) so both
backends produce bit-identical trajectories. Any change here must be
mirrored there.
"""

from __future__ import annotations

from math import log10

# Pathloss applied to squared distance in km^2: exponent -37.6/20.
_PL_EXP = -1.88


def simulate_run(
    gx,
    gy,
    cio,
    n_tics: int,
    x0: float,
    y0: float,
    ux: float,
    uy: float,
    step_m: float,
    length_m: float,
    coverage_m: float,
    lin_const: float,
    noise_mw: float,
    sinr_min_db: float,
    hys_db: float,
    ttt_tics: int,
    exec_hold_tics: int,
    window_len: int,
    measure_during_exec: bool,
    shadow_lin=None,
):
    """Run one TU trace; see kernel.simulate_run for the contract."""
    gxl = [float(v) for v in gx]
    gyl = [float(v) for v in gy]
    ciol = [float(v) for v in cio]
    n = len(gxl)
    shadow = shadow_lin.tolist() if shadow_lin is not None else None

    cov2 = coverage_m * coverage_m

    serving = -1
    timer = 0
    pending = -1
    exec_rem = 0
    win = [0.0] * window_len
    win_n = 0
    win_head = 0

    ho_times = 0
    outage = 0
    ev_tics: list[int] = []
    ev_from: list[int] = []
    ev_to: list[int] = []
    ev_sinr: list[float] = []
    ssum = 0.0
    scount = 0

    for t in range(n_tics):
        dist = t * step_m
        if dist > length_m:
            dist = length_m
        px = x0 + ux * dist
        py = y0 + uy * dist

        row = shadow[t] if shadow is not None else None
        total = 0.0
        p_serv = 0.0
        serv_ok = False
        best_p = -1.0
        best_g = -1
        for g in range(n):
            dx = gxl[g] - px
            dy = gyl[g] - py
            d2 = dx * dx + dy * dy
            if d2 <= cov2:
                d2c = d2 if d2 >= 1.0 else 1.0
                p = lin_const * (d2c * 1e-6) ** _PL_EXP
                if row is not None:
                    p = p * row[g]
                total = total + p
                if p > best_p:
                    best_p = p
                    best_g = g
                if g == serving:
                    p_serv = p
                    serv_ok = True

        if serving < 0 or not serv_ok:
            # link lost or never attached: reset and re-attach if possible
            timer = 0
            pending = -1
            exec_rem = 0
            win_n = 0
            win_head = 0
            if best_g >= 0:
                serving = best_g
            else:
                serving = -1
                outage += 1
            continue

        serv_db = 10.0 * log10(p_serv / ((total - p_serv) + noise_mw))
        ssum = ssum + serv_db
        scount += 1

        if exec_rem > 0:
            exec_rem -= 1
            if measure_during_exec:
                if win_n < window_len:
                    win[(win_head + win_n) % window_len] = serv_db
                    win_n += 1
                else:
                    win[win_head] = serv_db
                    win_head = (win_head + 1) % window_len
            continue

        best_db = 10.0 * log10(best_p / ((total - best_p) + noise_mw))

        cond = False
        if best_g != serving and win_n == window_len and best_db > sinr_min_db:
            s = 0.0
            i = win_head
            for _ in range(window_len):
                s = s + win[i]
                i += 1
                if i == window_len:
                    i = 0
            avg = s / window_len
            if best_db - avg + (ciol[best_g] - ciol[serving]) > hys_db:
                cond = True

        if cond:
            if pending < 0 or pending == best_g:
                pending = best_g
                timer += 1
                if timer == ttt_tics:
                    ev_tics.append(t)
                    ev_from.append(serving)
                    ev_to.append(best_g)
                    ev_sinr.append(best_db)
                    serving = best_g
                    exec_rem = exec_hold_tics
                    ho_times += 1
                    timer = 0
                    pending = -1
                    win_n = 0
                    win_head = 0
                    continue
            else:
                timer = 0
                pending = best_g
        else:
            timer = 0
            pending = -1

        if win_n < window_len:
            win[(win_head + win_n) % window_len] = serv_db
            win_n += 1
        else:
            win[win_head] = serv_db
            win_head = (win_head + 1) % window_len

    return ho_times, ev_tics, ev_from, ev_to, ev_sinr, outage, ssum, scount
