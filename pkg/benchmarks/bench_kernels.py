"""Benchmark the numba kernels against the pure-numpy fallback.

Run as a script:

    python benchmarks/bench_kernels.py [--n 50000]

Times the dense wedge product and the metric product kernel on random
coefficient vectors, plus one composite operation (the 16-dim exterior
extension of a linear map) that is built from many kernel calls.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from spinrep import _kernels
from spinrep import clifford as cl
from spinrep import grassmann as gr
from spinrep import transforms as tr


def _time(fn, reps: int) -> float:
    start = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - start) / reps


def bench(n: int) -> None:
    rng = np.random.default_rng(0)
    a = rng.normal(size=16) + 1j * rng.normal(size=16)
    b = rng.normal(size=16) + 1j * rng.normal(size=16)
    tensor = cl.product_tensor(gr.minkowski())
    amap = rng.normal(size=(4, 4))

    rows = []
    variants = [("numpy", _kernels.wedge16_numpy, _kernels.mul16_numpy)]
    if _kernels.BACKEND == "numba":
        variants.append(("numba", _kernels.wedge16_numba, _kernels.mul16_numba))
        # warm the JIT before timing
        _kernels.wedge16_numba(a, b)
        _kernels.mul16_numba(a, b, tensor)
    else:
        print("numba backend unavailable (SPINREP_BACKEND=numpy or numba missing); "
              "timing the numpy path only")

    for name, wedge, mul in variants:
        t_wedge = _time(lambda: wedge(a, b), n)
        t_mul = _time(lambda: mul(a, b, tensor), n)
        rows.append((name, t_wedge, t_mul))

    print(f"\nper-call timings over {n} reps")
    print(f"{'backend':10s} {'wedge16':>12s} {'mul16':>12s}")
    for name, t_wedge, t_mul in rows:
        print(f"{name:10s} {t_wedge * 1e6:>10.2f}us {t_mul * 1e6:>10.2f}us")
    if len(rows) == 2:
        print(f"{'speedup':10s} {rows[0][1] / rows[1][1]:>11.2f}x "
              f"{rows[0][2] / rows[1][2]:>11.2f}x")

    # composite: exterior extension assembles 32 kernel calls per map
    reps = max(1, n // 50)
    t_push = _time(lambda: tr.exterior_pushforward(amap), reps)
    print(f"\nexterior extension of a 4x4 map ({_kernels.BACKEND} backend): "
          f"{t_push * 1e6:.1f}us per map over {reps} reps")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=50000, help="repetitions per kernel")
    args = parser.parse_args()
    print(f"selected backend: {_kernels.backend_name()}")
    bench(args.n)


if __name__ == "__main__":
    main()
