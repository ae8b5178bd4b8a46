"""Time the transition-column kernels with and without numba.

    python3 benchmarks/bench_kernels.py [--weights 12 16 20] [--repeat 3]

Each run builds every column of a given weight from an empty memo, once with
the compiled int64 kernel and once with the pure-Python fallback on object
arrays, and checks that both give identical columns. Setting
``WITT_FORGE_JIT=0`` disables the compiled path globally; here both paths
are selected per builder so one process can compare them.
"""
import argparse
import time

import numpy as np

from witt_forge import _kernels as K
from witt_forge._jit import JIT_ENABLED
from witt_forge.partitions import partitions_of


def build_all(kind, n, use_jit):
    builder = K.ColumnBuilder(kind, use_jit=use_jit)
    start = time.perf_counter()
    cols = [builder.column(mu) for mu in partitions_of(n, degree_bound=None)]
    return time.perf_counter() - start, cols


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--weights", type=int, nargs="+", default=[10, 14, 18])
    parser.add_argument("--kinds", nargs="+", default=["s", "m"], choices=["s", "m"])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not JIT_ENABLED:
        print("numba disabled (WITT_FORGE_JIT=0 or not installed): both columns time the fallback")
    build_all("s", 4, True)  # compile (or load cached machine code) outside the timings
    build_all("m", 4, True)
    print(f"{'basis':>5} {'weight':>6} {'columns':>8} {'jit s':>9} {'fallback s':>11} {'speedup':>8}")
    for kind in args.kinds:
        for n in args.weights:
            jit_t = min(build_all(kind, n, True)[0] for _ in range(args.repeat))
            fb_t = min(build_all(kind, n, False)[0] for _ in range(args.repeat))
            _, a = build_all(kind, n, True)
            _, b = build_all(kind, n, False)
            same = all(np.array_equal(np.asarray(x, dtype=object), np.asarray(y, dtype=object)) for x, y in zip(a, b))
            if not same:
                raise SystemExit(f"JIT and fallback disagree at {kind}, weight {n}")
            print(f"{kind:>5} {n:>6} {len(a):>8} {jit_t:>9.4f} {fb_t:>11.4f} {fb_t / jit_t:>7.1f}x")


if __name__ == "__main__":
    main()
