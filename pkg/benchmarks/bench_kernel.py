#!/usr/bin/env python3
"""Benchmark the compiled tic-loop kernel against the pure-Python fallback.

Runs identical replicates through both backends, verifies the outputs are
bit-identical, and reports per-run wall time and tics/second.

  python3 benchmarks/bench_kernel.py [--density 30] [--replicates 10]
"""

import argparse
import math
import time

import numpy as np

from udnsim.kernel import available_backends, get_backend
from udnsim.deployment import Arena, deploy_gnbs
from udnsim.mobility import route_for_case
from udnsim.radio import PATHLOSS_OFFSET_DB, RadioParams, dbm_to_mw, noise_power_dbm


def build_args(density: int, replicate: int, n_tics: int, sigma: float):
    rng = np.random.default_rng(1000 + replicate)
    gnbs = deploy_gnbs(Arena(), density, rng)
    route = route_for_case("A" if replicate % 2 else "B", 50)
    shadow = None
    if sigma > 0:
        shadow = np.exp(
            rng.standard_normal((n_tics, density)) * (sigma * (-0.1 * math.log(10.0)))
        )
    lin_const = 10.0 ** ((45.0 - PATHLOSS_OFFSET_DB) / 10.0)
    noise_mw = dbm_to_mw(noise_power_dbm(RadioParams()))
    ux, uy = route.unit
    return (
        gnbs.xs, gnbs.ys, np.zeros(density), n_tics,
        route.start[0], route.start[1], ux, uy, route.step_m, route.length_m,
        gnbs.coverage_m, lin_const, noise_mw, -7.0, 3.0, 4, 25, 10, False, shadow,
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--density", type=int, default=30)
    parser.add_argument("--replicates", type=int, default=10)
    parser.add_argument("--tics", type=int, default=7000)
    parser.add_argument("--sigma", type=float, default=1.0)
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends available: {backends}")
    arg_sets = [
        build_args(args.density, r, args.tics, args.sigma) for r in range(args.replicates)
    ]

    timings = {}
    outputs = {}
    for name in backends:
        fn = get_backend(name)
        fn(*arg_sets[0])  # warm up / JIT-free but fair
        t0 = time.perf_counter()
        outputs[name] = [fn(*a) for a in arg_sets]
        timings[name] = time.perf_counter() - t0

    total_tics = args.replicates * args.tics
    for name in backends:
        per_run = timings[name] / args.replicates
        print(
            f"backend={name:>2}: {timings[name]:7.3f} s total, {per_run * 1e3:8.2f} ms/run, "
            f"{total_tics / timings[name] / 1e6:6.2f} Mtics/s"
        )
    if len(backends) == 2:
        print(f"speedup c vs py: {timings['py'] / timings['c']:.1f}x")
        identical = outputs["c"] == outputs["py"]
        print(f"outputs bit-identical: {identical}")
        if not identical:
            raise SystemExit(1)


if __name__ == "__main__":
    main()
