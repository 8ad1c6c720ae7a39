# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled tic-loop kernel.

Mirror of _kernel_py.simulate_run with identical expression forms and
accumulation order; both call the platform libm, so results are
bit-identical between backends. Any change here must be mirrored there.
"""

from libc.math cimport log10, pow

import numpy as np

# Pathloss applied to squared distance in km^2: exponent -37.6/20.
cdef double _PL_EXP = -1.88


def simulate_run(
    gx,
    gy,
    cio,
    int n_tics,
    double x0,
    double y0,
    double ux,
    double uy,
    double step_m,
    double length_m,
    double coverage_m,
    double lin_const,
    double noise_mw,
    double sinr_min_db,
    double hys_db,
    int ttt_tics,
    int exec_hold_tics,
    int window_len,
    bint measure_during_exec,
    shadow_lin=None,
):
    """Run one TU trace; see kernel.simulate_run for the contract."""
    cdef double[::1] gxv = np.ascontiguousarray(gx, dtype=np.float64)
    cdef double[::1] gyv = np.ascontiguousarray(gy, dtype=np.float64)
    cdef double[::1] ciov = np.ascontiguousarray(cio, dtype=np.float64)
    cdef Py_ssize_t n = gxv.shape[0]

    cdef bint has_shadow = shadow_lin is not None
    cdef double[:, ::1] shadow
    if has_shadow:
        shadow = np.ascontiguousarray(shadow_lin, dtype=np.float64)

    cdef double cov2 = coverage_m * coverage_m

    cdef int serving = -1
    cdef int timer = 0
    cdef int pending = -1
    cdef int exec_rem = 0
    cdef double[::1] win = np.zeros(window_len, dtype=np.float64)
    cdef int win_n = 0
    cdef int win_head = 0

    cdef int ho_times = 0
    cdef int outage = 0
    ev_tics = []
    ev_from = []
    ev_to = []
    ev_sinr = []
    cdef double ssum = 0.0
    cdef int scount = 0

    cdef int t, k
    cdef Py_ssize_t g
    cdef int i
    cdef bint serv_ok, cond
    cdef double dist, px, py, dx, dy, d2, d2c, p
    cdef double total, p_serv, best_p, serv_db, best_db, s, avg
    cdef int best_g

    for t in range(n_tics):
        dist = t * step_m
        if dist > length_m:
            dist = length_m
        px = x0 + ux * dist
        py = y0 + uy * dist

        total = 0.0
        p_serv = 0.0
        serv_ok = False
        best_p = -1.0
        best_g = -1
        for g in range(n):
            dx = gxv[g] - px
            dy = gyv[g] - py
            d2 = dx * dx + dy * dy
            if d2 <= cov2:
                d2c = d2 if d2 >= 1.0 else 1.0
                p = lin_const * pow(d2c * 1e-6, _PL_EXP)
                if has_shadow:
                    p = p * shadow[t, g]
                total = total + p
                if p > best_p:
                    best_p = p
                    best_g = <int>g
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
            for k in range(window_len):
                s = s + win[i]
                i += 1
                if i == window_len:
                    i = 0
            avg = s / (<double>window_len)
            if best_db - avg + (ciov[best_g] - ciov[serving]) > hys_db:
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
