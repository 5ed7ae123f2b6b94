#!/usr/bin/env python3
"""Benchmark the GF(p) rank kernels: numba JIT versus the pure-numpy fallback.

Times both implementations on the boundary matrices that actually arise in
classification runs (skeleta of simplex boundaries) and on dense random
matrices, then prints a JSON table.  The two paths are also cross-checked
for agreement on every input.

Usage: python benchmarks/bench_rank.py [--repeats N] [-o results.json]
"""

import argparse
import json
import sys
import time

import numpy as np

from cmtkit.generators import boundary_simplex
from cmtkit.homology import boundary_matrices
from cmtkit.linalg import HAS_NUMBA, _rank_mod_p_numpy

REPEATS_DEFAULT = 25
PRIMES = (2, 7)


def collect_inputs() -> list[tuple[str, np.ndarray]]:
    inputs = []
    for n, j in ((7, 3), (8, 4), (9, 4)):
        cx = boundary_simplex(n).skeleton(j)
        bm = max(boundary_matrices(cx), key=lambda m: m.matrix.size)
        inputs.append((f"boundary_{n}_skeleton_{j} {bm.matrix.shape}", bm.matrix))
    rng = np.random.default_rng(12345)
    for size in (64, 128, 256):
        a = rng.integers(-4, 5, size=(size, size), dtype=np.int64)
        inputs.append((f"random_{size}x{size}", a))
    return inputs


def time_impl(fn, a, p, repeats):
    fn(a, p)  # warm-up (and JIT compile for the numba path)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(a, p)
        times.append(time.perf_counter() - t0)
    return min(times), sum(times) / len(times)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=REPEATS_DEFAULT)
    parser.add_argument("-o", "--output", help="write JSON results here")
    args = parser.parse_args()

    impls = {"numpy": _rank_mod_p_numpy}
    if HAS_NUMBA:
        from cmtkit.linalg import _rank_mod_p_numba
        impls["numba"] = _rank_mod_p_numba
    else:
        print("numba not importable; benchmarking the numpy path only", file=sys.stderr)

    results = {"repeats": args.repeats, "cases": []}
    for name, a in collect_inputs():
        for p in PRIMES:
            ranks = {label: fn(a, p) for label, fn in impls.items()}
            if len(set(ranks.values())) != 1:
                raise AssertionError(f"backends disagree on {name} mod {p}: {ranks}")
            case = {"matrix": name, "p": p, "rank": next(iter(ranks.values()))}
            for label, fn in impls.items():
                best, mean = time_impl(fn, a, p, args.repeats)
                case[label] = {"best_s": round(best, 6), "mean_s": round(mean, 6)}
            if len(impls) == 2:
                case["speedup_numba"] = round(case["numpy"]["best_s"]
                                              / case["numba"]["best_s"], 2)
            results["cases"].append(case)

    text = json.dumps(results, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
