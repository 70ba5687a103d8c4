"""Compare the pure-Python and compiled kernels on the hot paths.

Usage:

    python3 benchmarks/bench_backends.py [--full]

Three kernels are timed: the closed-form distance, the definitional menu
sweep, and the full best-approximation sweep over every ordered set
partition.  --full adds the Fubini(9) grid sweep (the largest acceptance
workload).
"""

from __future__ import annotations

import argparse
import random
import time

from preorder_bca._backend import available_backends
from preorder_bca import families


def _random_strict_ups(rng: random.Random, n: int) -> tuple[int, ...]:
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < 0.35:
                rows[i] |= 1 << j
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rows[k]
    cols = [0] * n
    for i in range(n):
        for j in range(n):
            if (rows[i] >> j) & 1:
                cols[j] |= 1 << i
    return tuple(cols[x] & ~rows[x] for x in range(n))


def timeit(fn, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true",
                        help="include the Fubini(9) sweep")
    args = parser.parse_args()

    backends = available_backends()
    if "c" not in backends:
        print("note: compiled kernels not built; showing pure Python only")
        print("      (python setup.py build_ext --inplace)")

    rng = random.Random(1)
    pairs16 = [(_random_strict_ups(rng, 16), _random_strict_ups(rng, 16))
               for _ in range(2000)]
    up18 = _random_strict_ups(rng, 18)
    up18b = _random_strict_ups(rng, 18)
    sweep_base = families.fence(8).strict_up
    workloads = [
        ("fast distance, 2000 pairs at n=16",
         lambda mod: [mod.fast_distance(16, a, b) for a, b in pairs16]),
        ("direct menu sweep, one pair at n=18",
         lambda mod: mod.direct_distance(18, up18, up18b)),
        ("bca sweep, Fubini(8)=545835 candidates (fence base)",
         lambda mod: mod.sweep_min_distance(8, sweep_base)),
    ]
    if args.full:
        grid = families.coordinatewise_order(3).strict_up
        workloads.append(
            ("bca sweep, Fubini(9)=7087261 candidates (3x3 grid base)",
             lambda mod: mod.sweep_min_distance(9, grid)))

    width = max(len(name) for name, _ in workloads)
    print(f"{'workload'.ljust(width)}  {'python':>10}  {'c':>10}  speedup")
    for name, run in workloads:
        times = {}
        for backend_name, mod in backends.items():
            times[backend_name] = timeit(lambda m=mod: run(m))
        py = times["python"]
        if "c" in times:
            c = times["c"]
            print(f"{name.ljust(width)}  {py:>9.3f}s  {c:>9.3f}s  "
                  f"{py / c:>6.1f}x")
        else:
            print(f"{name.ljust(width)}  {py:>9.3f}s  {'-':>10}")


if __name__ == "__main__":
    main()
