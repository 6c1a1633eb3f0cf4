#!/usr/bin/env python3
"""Time the compiled box-scan kernel against the pure-Python twin.

Both kernels walk the identical lattice in the identical order, so their
results must match exactly; the only difference is speed.  Run from the
repository root:

    python3 benchmarks/bench_boxscan.py --n-vars 4 --bound 12
"""

import argparse
import sys
import time
from pathlib import Path
from random import Random

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gitstab import boxscan


def random_support(rng, n_vars, degree, terms):
    support = set()
    while len(support) < terms:
        mono = [0] * n_vars
        for _ in range(degree):
            mono[rng.randrange(n_vars)] += 1
        support.add(tuple(mono))
    return sorted(support)


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-vars", type=int, default=4)
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--terms", type=int, default=8)
    ap.add_argument("--bound", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    gammas = random_support(Random(args.seed), args.n_vars, args.degree, args.terms)
    candidates = boxscan.candidate_count(args.n_vars, args.bound)
    print(f"support of {len(gammas)} monomials in {args.n_vars} variables, "
          f"box bound {args.bound} ({candidates} candidates)")

    t_py, r_py = best_of(
        lambda: boxscan.scan_box(gammas, args.n_vars, args.bound, backend="python"),
        args.repeat,
    )
    print(f"python   kernel: {t_py:8.4f} s  ({r_py.scanned} vectors scanned)")

    if not boxscan.HAVE_COMPILED:
        print("compiled kernel: not built (install with Cython available, "
              "or unset GITSTAB_NO_EXT)")
        return 0

    t_c, r_c = best_of(
        lambda: boxscan.scan_box(gammas, args.n_vars, args.bound, backend="compiled"),
        args.repeat,
    )
    print(f"compiled kernel: {t_c:8.4f} s  ({r_c.scanned} vectors scanned)")

    if r_py != r_c:
        print("MISMATCH between kernels:")
        print(f"  python  : {r_py}")
        print(f"  compiled: {r_c}")
        return 1
    print(f"results identical; speedup x{t_py / t_c:.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
