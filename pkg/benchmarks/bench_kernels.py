"""
Time the numba kernels against their numpy twins on Thue-Morse and
Fibonacci prefixes.

    python3 benchmarks/bench_kernels.py [--n 200000] [--repeat 3]

Numba timings exclude the first (compiling or cache-loading) call.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from morphic import kernels
from morphic.core import Morphism
from morphic.generate import WordStream


def _words(n):
    tm = WordStream(Morphism.from_dict({"0": "01", "1": "10"}), "0").prefix(n).symbols
    fib = WordStream(Morphism.from_dict({"0": "01", "1": "0"}), "0").prefix(n).symbols
    return tm, fib


def cases(n):
    tm, fib = _words(n)
    mu = Morphism.from_dict({"0": "01", "1": "10"})
    vals = tm.astype(np.int64)
    return {
        "expand": (mu.flat, mu.offsets, mu.lengths, tm),
        "occurrences": (tm, np.array([0, 1, 1, 0], dtype=np.int32)),
        "periodic_windows": (tm, 64, 1, 1),
        "additive_cubes": (vals[: n // 10], 30),
        "xxxr": (fib[: n // 10], 30),
        "factor_counts": (fib, 2, 40),
        "runs": (tm, 1),
        "square_prefixes": (fib, n // 2),
    }


def _args(name, case):
    if name == "expand":
        flat, offsets, lengths, block = case
        return (block, flat, offsets, lengths)
    return case


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    p.add_argument("--n", type=int, default=200_000)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    print(f"{'kernel':<18}{'numba s':>12}{'numpy s':>12}{'speedup':>10}")
    for name, case in cases(args.n).items():
        nb, npy = kernels.KERNELS[name]
        call = _args(name, case)
        nb(*call)  # compile / load cache
        t_nb = best_of(nb, call, args.repeat)
        t_np = best_of(npy, call, args.repeat)
        print(f"{name:<18}{t_nb:>12.5f}{t_np:>12.5f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
