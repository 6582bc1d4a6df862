"""Compare the compiled and numpy elimination kernels mod p.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 100 400 --repeat 5
"""

import argparse
import time

import numpy as np

from octavic.arith import _kernels_py

try:
    from octavic.arith import _kernels as compiled
except ImportError:
    compiled = None

PRIME = 2147483629  # largest prime below 2**31


def random_system(n, rng):
    """A consistent overdetermined system [A | A x] mod PRIME."""
    a = rng.integers(0, PRIME, size=(n + n // 20, n), dtype=np.uint64)
    x = rng.integers(0, PRIME, size=n, dtype=np.uint64)
    b = (a.astype(object) @ x.astype(object)) % PRIME
    return np.ascontiguousarray(np.column_stack([a, b.astype(np.uint64)]))


def timed(fn, mat, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        work = mat.copy()
        start = time.perf_counter()
        result = fn(work, PRIME)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[100, 300, 600, 1161])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'unknowns':>9} {'numpy (s)':>11} {'compiled (s)':>13} {'speedup':>8}  agree")
    for n in args.sizes:
        mat = random_system(n, rng)
        t_py, r_py = timed(_kernels_py.solve_mod, mat, args.repeat)
        if compiled is None:
            print(f"{n:>9} {t_py:>11.3f} {'n/a':>13} {'':>8}  -")
            continue
        t_c, r_c = timed(compiled.solve_mod, mat, args.repeat)
        agree = r_py[0] == r_c[0] and r_py[2] == r_c[2] and np.array_equal(r_py[3], r_c[3])
        print(f"{n:>9} {t_py:>11.3f} {t_c:>13.3f} {t_py / t_c:>7.1f}x  {agree}")


if __name__ == "__main__":
    main()
