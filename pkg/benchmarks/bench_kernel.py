#!/usr/bin/env python3
"""Benchmark the compiled integer-elimination kernel against the pure twin.

Generates boundary-matrix-like sparse {-1,0,1} matrices and denser random
integer matrices, then times row HNF and Smith normal form on both backends.

Usage: python benchmarks/bench_kernel.py [--sizes 20,40,60] [--repeat 5]
"""

import argparse
import random
import time

from hypermorse._kernel import pylinalg

try:
    from hypermorse._kernel import _speedups
except ImportError:
    _speedups = None


def sparse_signed(rng, rows, cols, fill=0.12):
    return [
        [rng.choice((-1, 1)) if rng.random() < fill else 0 for _ in range(cols)]
        for _ in range(rows)
    ]


def dense_small(rng, rows, cols, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def time_call(fn, mats, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for m in mats:
            fn(m)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="20,40,60")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--batch", type=int, default=20)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _speedups is None:
        print("compiled kernel not available; run pip install -e . first")

    rng = random.Random(0)
    print("%-28s %10s %10s %8s" % ("case", "pure [s]", "compiled", "speedup"))
    for n in sizes:
        for label, make in (
            ("boundary-like %dx%d" % (n, n), sparse_signed),
            ("dense %dx%d" % (n, n), dense_small),
        ):
            mats = [make(rng, n, n) for _ in range(args.batch)]
            for op_name, py_fn, c_fn in (
                ("hnf", pylinalg.hnf_rows, _speedups.hnf_rows if _speedups else None),
                (
                    "snf",
                    pylinalg.snf_decompose,
                    _speedups.snf_decompose if _speedups else None,
                ),
            ):
                t_py = time_call(py_fn, mats, args.repeat)
                if c_fn is None:
                    print("%-28s %10.4f %10s %8s" % (label + " " + op_name, t_py, "-", "-"))
                    continue
                t_c = time_call(c_fn, mats, args.repeat)
                print(
                    "%-28s %10.4f %10.4f %7.2fx"
                    % (label + " " + op_name, t_py, t_c, t_py / t_c if t_c else float("inf"))
                )


if __name__ == "__main__":
    main()
