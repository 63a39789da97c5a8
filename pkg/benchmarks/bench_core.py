"""Benchmark the compiled row reduction kernel against the pure-Python
fallback.

Two views: microbenchmarks on random integer matrices, and an
end-to-end analysis of the largest catalog fixture run in a subprocess
with each backend forced via CURVESAT_BACKEND.

Usage: python3 benchmarks/bench_core.py [--repeat N] [--skip-e2e]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from curvesat import _core_py

try:
    from curvesat import _core
except ImportError:
    _core = None


def random_rows(rng, nrows, ncols, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(ncols)]
            for _ in range(nrows)]


def time_call(fn, rows, ncols, repeat):
    best = float("inf")
    for _ in range(repeat):
        work = [list(r) for r in rows]
        start = time.perf_counter()
        fn(work, ncols)
        best = min(best, time.perf_counter() - start)
    return best


def micro(repeat):
    rng = random.Random(0)
    cases = [
        ("rref 20x20", 20, 20, 9),
        ("rref 60x60", 60, 60, 9),
        ("rref 120x120", 120, 120, 9),
        ("rref 60x60 big entries", 60, 60, 10 ** 9),
    ]
    print(f"{'case':<24} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, nrows, ncols, bound in cases:
        rows = random_rows(rng, nrows, ncols, bound)
        t_py = time_call(_core_py.rref, rows, ncols, repeat)
        if _core is None:
            print(f"{label:<24} {t_py * 1e3:>9.1f}ms {'-':>10} {'-':>8}")
            continue
        t_c = time_call(_core.rref, rows, ncols, repeat)
        print(f"{label:<24} {t_py * 1e3:>9.1f}ms {t_c * 1e3:>9.1f}ms "
              f"{t_py / t_c:>7.1f}x")


SNIPPET = """
import time
from curvesat.analysis import analyze_catalog
from curvesat.backend import BACKEND
start = time.perf_counter()
analyze_catalog("ziegler-A")
print(f"{BACKEND} {time.perf_counter() - start:.2f}")
"""


def end_to_end():
    print("\nend-to-end: full analysis of ziegler-A (9 lines, d = 9)")
    for backend in ("python", "c"):
        if backend == "c" and _core is None:
            print("  compiled backend not built, skipping")
            continue
        env = dict(os.environ, CURVESAT_BACKEND=backend)
        out = subprocess.run([sys.executable, "-c", SNIPPET], env=env,
                             capture_output=True, text=True, check=True)
        tag, seconds = out.stdout.split()
        print(f"  backend {tag:<7} {float(seconds):6.2f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions per case (best is kept)")
    parser.add_argument("--skip-e2e", action="store_true",
                        help="only run the matrix microbenchmarks")
    args = parser.parse_args()
    if _core is None:
        print("note: compiled extension not available; showing python only")
    micro(args.repeat)
    if not args.skip_e2e:
        end_to_end()


if __name__ == "__main__":
    main()
