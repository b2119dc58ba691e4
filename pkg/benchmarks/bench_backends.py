"""Time the jitted and vectorized-numpy integration paths on the flagship run.

Usage: python3 benchmarks/bench_backends.py [--seeds N] [--repeat R]
"""
import argparse
import time

import numpy as np

from funnel_langevin import (
    ControllerConfig,
    FunnelSpec,
    InitSpec,
    ReferenceSignal,
    SimConfig,
    certify,
    extend_double_well,
    run,
)
from funnel_langevin._kernels import available_backends


def _setup():
    pot = extend_double_well(1.5, 3.0, 10.0)
    fun = FunnelSpec.constant(1.0)
    ref = ReferenceSignal.figure_eight(0.5)
    rep = certify(pot, fun, ref, 606.0)
    ctrl = ControllerConfig.isotropic(rep.alpha, 606.0, 2, fun, ref)
    return pot, ctrl


def bench(backend, pot, ctrl, seeds, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for seed in range(seeds):
            sim = SimConfig(20, 1e-4, 1.0, seed, InitSpec.point([1.0, 0.0]))
            rec = run(pot, ctrl, sim, backend=backend)
        best = min(best, (time.perf_counter() - t0) / seeds)
    return best, rec


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seeds", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    pot, ctrl = _setup()
    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    print("flagship run: 20 trajectories, dt=1e-4, horizon=1.0 (10^4 steps)")

    results = {}
    for backend in backends:
        if backend == "numba":  # trigger compilation outside the timed region
            sim = SimConfig(2, 1e-2, 0.1, 0, InitSpec.point([1.0, 0.0]))
            run(pot, ctrl, sim, backend="numba")
        best, rec = bench(backend, pot, ctrl, args.seeds, args.repeat)
        results[backend] = (best, rec)
        print(f"{backend:>6}: {best * 1e3:8.2f} ms per seed "
              f"(best of {args.repeat} x {args.seeds} seeds)")

    if len(results) == 2:
        (t_nb, rec_nb), (t_np, rec_np) = results["numba"], results["numpy"]
        agree = np.allclose(rec_nb.mean, rec_np.mean, rtol=1e-12, atol=1e-13)
        print(f"speedup numba over numpy: {t_np / t_nb:.1f}x, records agree: {agree}")


if __name__ == "__main__":
    main()
