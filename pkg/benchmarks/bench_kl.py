#!/usr/bin/env python3
"""Benchmark the two KL-table kernels (compiled extension vs pure Python).

Computes the full table of ordinary polynomials for each requested Weyl group
with both kernels, checks the outputs are bit-identical, and reports wall
clock and speedup.  Not acceptance-bearing; the pure kernel is the import-time
fallback and this script is the place to see what the extension buys.

Usage:
    python benchmarks/bench_kl.py [--types A3,B3,D4] [--repeat 3]
"""

import argparse
import time

import numpy as np

from diracoh import build_root_system
from diracoh._kernel import kl_table_compiled
from diracoh._klpure import kl_table as kl_table_pure
from diracoh.blocks import ambient_weyl


def time_kernel(fn, tables, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*tables)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--types", default="A3,B3,D4",
                        help="comma-separated Cartan types")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    header = f"{'type':>6} {'|W|':>6} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name in args.types.split(","):
        name = name.strip()
        rs = build_root_system(name)
        W = ambient_weyl(rs)
        tables = W.np_tables()
        t_pure, out_pure = time_kernel(kl_table_pure, tables, args.repeat)
        if kl_table_compiled is None:
            print(f"{name:>6} {W.size:>6} {t_pure:>10.3f} {'n/a':>13} {'n/a':>8}")
            continue
        t_comp, out_comp = time_kernel(kl_table_compiled, tables, args.repeat)
        assert np.array_equal(out_pure[0], out_comp[0])
        assert np.array_equal(out_pure[1], out_comp[1])
        print(
            f"{name:>6} {W.size:>6} {t_pure:>10.3f} {t_comp:>13.4f} "
            f"{t_pure / t_comp:>7.1f}x"
        )


if __name__ == "__main__":
    main()
