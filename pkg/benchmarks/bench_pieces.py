#!/usr/bin/env python3
"""Benchmark the piece kernels: compiled extension vs pure Python.

Times the three kernel entry points on the relator of a chosen knot:
the max-piece table, the reach tables, and a full min-pieces sweep over
every rotation offset and span length.

Usage:
    python benchmarks/bench_pieces.py [--m M] [--n N] [--sign +|-] [--repeat R]
"""

import argparse
import time

from bridgeforge._kernel import _pure
from bridgeforge.presentation import relator
from bridgeforge.slope import GenusOneKnot

try:
    from bridgeforge._kernel import _speed
except ImportError:
    _speed = None


def bench(impl, letters, repeat):
    n = len(letters)
    out = {}
    t0 = time.perf_counter()
    for _ in range(repeat):
        table = impl.max_piece_table(letters)
    out["max_piece_table"] = (time.perf_counter() - t0) / repeat
    P = table[0]
    t0 = time.perf_counter()
    for _ in range(repeat):
        impl.reach_table(P, 4)
    out["reach_table"] = (time.perf_counter() - t0) / repeat
    t0 = time.perf_counter()
    for _ in range(repeat):
        for s in range(n):
            for L in range(1, n + 1):
                impl.min_pieces_span(P, s, L)
    out["min_pieces sweep"] = (time.perf_counter() - t0) / repeat
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, default=6)
    parser.add_argument("--n", type=int, default=6)
    parser.add_argument("--sign", choices=("+", "-"), default="+")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    knot = GenusOneKnot(args.m, args.n, 1 if args.sign == "+" else -1)
    letters = list(relator(knot.fraction).u)
    print(f"relator of {knot}: length {len(letters)}, "
          f"symmetrized set of {2 * len(letters)} words")

    pure = bench(_pure, letters, args.repeat)
    rows = {"pure": pure}
    if _speed is not None:
        rows["compiled"] = bench(_speed, letters, args.repeat)
    else:
        print("compiled kernel not available; showing pure timings only")

    width = max(len(k) for k in pure)
    header = f"{'kernel':>{width}}  " + "".join(f"{name:>18}" for name in pure)
    print(header)
    for impl_name, res in rows.items():
        print(f"{impl_name:>{width}}  "
              + "".join(f"{res[name] * 1e3:>15.3f} ms" for name in res))
    if _speed is not None:
        speedups = [pure[k] / rows["compiled"][k] for k in pure]
        print("speedup (pure / compiled): "
              + ", ".join(f"{name} x{s:.1f}" for name, s in zip(pure, speedups)))


if __name__ == "__main__":
    main()
