"""Benchmark the exact elimination kernels on real Gram matrices.

Times every available combination of loop implementation (pure Python vs
the compiled extension) and integer type (int vs gmpy2.mpz) on the same
matrix, and cross-checks that all of them return the identical
determinant.  The matrix is A(n, 0) at an integer parameter, i.e. the
worst case the package actually runs: dense, symmetric, entries up to
N^n, Catalan(n) rows.

Usage:
    python3 benchmarks/bench_kernels.py                 # 132x132 (n=6)
    python3 benchmarks/bench_kernels.py --points 7      # 429x429, minutes
    python3 benchmarks/bench_kernels.py --repeat 3
"""

from __future__ import annotations

import argparse
import time

from ncgram import _kernels_py
from ncgram.tutte import build_A

try:
    from ncgram import _kernels
except ImportError:
    _kernels = None

try:
    from gmpy2 import mpz
except ImportError:
    mpz = None


def configurations():
    loops = [("python", _kernels_py)]
    if _kernels is not None:
        loops.append(("cython", _kernels))
    wrappers = [("int", lambda x: x)]
    if mpz is not None:
        wrappers.append(("gmpy2", mpz))
    for loop_name, impl in loops:
        for int_name, wrap in wrappers:
            yield f"{loop_name}+{int_name}", impl, wrap


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=6)
    parser.add_argument("--param", type=int, default=4)
    parser.add_argument("--repeat", type=int, default=1)
    args = parser.parse_args()

    matrix = build_A(args.points, 0, args.param)
    base = [list(row) for row in matrix.entries]
    print(f"matrix: {matrix.nrows}x{matrix.ncols}  (n={args.points}, N={args.param})")

    results: dict[str, int] = {}
    for name, impl, wrap in configurations():
        best = None
        for _ in range(args.repeat):
            rows = [[wrap(x) for x in row] for row in base]
            t0 = time.perf_counter()
            det = impl.det_bareiss(rows)
            elapsed = time.perf_counter() - t0
            best = elapsed if best is None else min(best, elapsed)
        results[name] = int(det)
        print(f"  {name:<14} {best:9.3f} s")

    if len(set(results.values())) != 1:
        print("DISAGREEMENT between configurations:")
        for name, det in results.items():
            print(f"  {name}: {det}")
        return 1
    print(f"all configurations agree: det = {next(iter(results.values()))}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
