"""Compare the numba and numpy row-reduction kernels.

    python benchmarks/bench_rref.py [--sizes 32 64 128] [--reps 5] [--algebra P4]

Part one times the raw kernels on random matrices over F_2 and F_5.  Part two
times a full enumeration in a fresh interpreter per backend, selected with
TAUTILT_NO_NUMBA.
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from tautilt import _kernels


def best_of(fn, reps):
    out = float("inf")
    for _ in range(reps):
        t = time.perf_counter()
        fn()
        out = min(out, time.perf_counter() - t)
    return out


def kernels(sizes, reps):
    try:
        from numba import njit
    except ImportError:
        print("numba not installed; only the numpy kernel is available")
        return
    jit = njit(cache=True)(_kernels._rref_loops)
    rng = np.random.default_rng(0)
    print(f"{'p':>3} {'n':>5} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for p in (2, 5):
        for n in sizes:
            m = rng.integers(0, p, size=(n, n + n // 2)).astype(np.int64)
            jit(m[:4, :4].copy(), p)  # compile outside the timing
            t_np = best_of(lambda: _kernels.rref_numpy(m.copy(), p), reps)
            t_nb = best_of(lambda: jit(m.copy(), p), reps)
            a, b = m.copy(), m.copy()
            assert _kernels.rref_numpy(a, p)[0] == jit(b, p)[0] and np.array_equal(a, b)
            print(f"{p:>3} {n:>5} {1e3 * t_np:>10.2f} {1e3 * t_nb:>10.2f} {t_np / t_nb:>8.1f}")


SNIPPET = """
import time
from tautilt import BACKEND
from tautilt.catalog import catalog
from tautilt.mutation import enumerate_pairs
a = catalog({name!r}, 2)
enumerate_pairs(catalog("A_2", 2))
t = time.perf_counter()
g = enumerate_pairs(a)
print(BACKEND, len(g), round(time.perf_counter() - t, 3))
"""


def end_to_end(name):
    print(f"\nenumeration of {name}, fresh process per backend")
    for flag in ("", "1"):
        env = dict(os.environ, TAUTILT_NO_NUMBA=flag)
        r = subprocess.run([sys.executable, "-c", SNIPPET.format(name=name)], env=env,
                           capture_output=True, text=True, check=True)
        backend, nodes, secs = r.stdout.split()
        print(f"  {backend:<6} nodes={nodes} {secs}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[32, 64, 128, 256])
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--algebra", default="P4")
    args = ap.parse_args()
    kernels(args.sizes, args.reps)
    end_to_end(args.algebra)


if __name__ == "__main__":
    main()
