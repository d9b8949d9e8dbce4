"""Time the compiled kernels against the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.
"""
import argparse
import math
import timeit

import numpy as np

from scsdiscord import _pykernels

try:
    from scsdiscord import _ckernels
except ImportError:
    _ckernels = None

A, W1, W2 = 0.73, 0.31, 0.69
THETAS = np.linspace(0.0, math.pi, 10_001)

CASES = {
    "discord (single angle)": (lambda k: k.discord(A, W1, W2, 1.0, 0.4), 20_000),
    "minimize_discord": (lambda k: k.minimize_discord(A, W1, W2, 46, 1e-10, 200), 500),
    "discord_scan (10001 angles)": (lambda k: k.discord_scan(A, W1, W2, THETAS), 20),
}


def best_time(fn, kernels, number, repeat):
    return min(timeit.repeat(lambda: fn(kernels), number=number, repeat=repeat)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the fallback is timed")
    print(f"{'kernel':<30s}{'python':>14s}{'cython':>14s}{'speedup':>10s}")
    for name, (fn, number) in CASES.items():
        py = best_time(fn, _pykernels, number, args.repeat)
        if _ckernels is None:
            print(f"{name:<30s}{py * 1e6:>12.2f}us")
            continue
        cy = best_time(fn, _ckernels, number, args.repeat)
        print(f"{name:<30s}{py * 1e6:>12.2f}us{cy * 1e6:>12.2f}us{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
