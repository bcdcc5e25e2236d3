"""Timing comparison of the compiled and numpy kernel backends.

Usage:
    python benchmarks/bench_kernels.py [--repeat 5] [--points 512]

Times overlap_grid / survival_grid over several component counts and
abs4_profile over several vector lengths, printing best-of-N wall times for
both backends and the speedup of the compiled one.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from orthokit import _kernels_py

try:
    from orthokit import _kernels
except ImportError:
    _kernels = None


def best_time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def row(label, args, repeat):
    py = best_time(getattr(_kernels_py, label.split()[0]), args, repeat)
    if _kernels is None:
        print(f"{label:>28}  python {py * 1e3:9.3f} ms   (no compiled backend)")
        return
    cy = best_time(getattr(_kernels, label.split()[0]), args, repeat)
    print(
        f"{label:>28}  python {py * 1e3:9.3f} ms   cython {cy * 1e3:9.3f} ms"
        f"   speedup {py / cy:6.2f}x"
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="best-of repetitions")
    ap.add_argument("--points", type=int, default=512, help="gamma grid length")
    opts = ap.parse_args()

    rng = np.random.RandomState(0)
    gammas = np.sort(rng.uniform(0.0, 20.0, size=opts.points))
    print(f"grid of {opts.points} points, best of {opts.repeat} runs")
    for n in (100, 10_000, 200_000):
        w = rng.uniform(0.1, 1.0, size=n)
        w /= w.sum()
        g = np.cumsum(rng.uniform(0.01, 1.0, size=n))
        row(f"overlap_grid n={n}", (w, g, gammas), opts.repeat)
        row(f"survival_grid n={n}", (w, g, gammas), opts.repeat)
    thetas = np.linspace(0.0, 2.0 * np.pi, 2001)
    for n in (65, 1025, 4097):
        lo = rng.normal(size=n)
        lo /= np.linalg.norm(lo)
        hi = rng.normal(size=n)
        hi /= np.linalg.norm(hi)
        row(f"abs4_profile n={n}", (lo, hi, thetas), opts.repeat)


if __name__ == "__main__":
    main()
