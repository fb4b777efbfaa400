"""Benchmark: jitted vs pure-numpy two-sided channel application.

Run from the repository root:

    python benchmarks/bench_kernels.py

The same comparison at the scan level can be reproduced end to end by
setting QUTRIT_DSD_PURE_NUMPY=1 and re-running any CLI command.
"""

import time

import numpy as np

from qutrit_dsd import _kernels
from qutrit_dsd.channel import ChannelParams, Variant, kraus_set
from qutrit_dsd.dynamics import ScanConfig, scan
from qutrit_dsd.states import horodecki_state


def time_fn(fn, *args, repeat=2000):
    fn(*args)  # warm (and JIT-compile) before timing
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - t0) / repeat


def main():
    ka = kraus_set(ChannelParams(r=0.9, p1=0.2, p2=0.2))
    kb = kraus_set(ChannelParams(r=0.15, p1=0.35, p2=0.35, variant=Variant.FACTORIZED))
    rho = horodecki_state(4.3)

    print(f"active backend: {_kernels.ACTIVE_BACKEND}")
    t_numpy = time_fn(_kernels.apply_two_sided_numpy, ka, kb, rho)
    print(f"numpy  two-sided apply: {t_numpy * 1e6:8.1f} us/call")

    if _kernels.NUMBA_AVAILABLE:
        t_numba = time_fn(_kernels.apply_two_sided_numba, ka, kb, rho)
        print(f"numba  two-sided apply: {t_numba * 1e6:8.1f} us/call")
        print(f"speedup: {t_numpy / t_numba:.1f}x")
    else:
        print("numba path unavailable (QUTRIT_DSD_PURE_NUMPY set or numba missing)")

    config = ScanConfig(alpha=4.3, r=0.9, variant=Variant.AS_WRITTEN, t_end=0.2, steps=201)
    scan(config)  # warm
    t0 = time.perf_counter()
    scan(config)
    print(f"201-point witness scan (active backend): {time.perf_counter() - t0:.3f} s")


if __name__ == "__main__":
    main()
