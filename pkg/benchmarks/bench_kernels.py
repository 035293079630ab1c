"""Time the numba and numpy enumeration kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row checks that both backends return the same count before timing.
"""

import argparse
import statistics
import time

from symbreak import kernels
from symbreak.automorphism import automorphisms
from symbreak.graph import cycle, grid, hypercube, path
from symbreak.indices import _witness_perms

WORKLOADS = [
    ("count P3xP3 k=3", "count_distinguishing", grid(3, 3), 3),
    ("count P3xP4 k=3", "count_distinguishing", grid(3, 4), 3),
    ("count C12 k=3", "count_distinguishing", cycle(12), 3),
    ("count P14 k=3", "count_distinguishing", path(14), 3),
    ("rgs Q4 d=2", "first_distinguishing_rgs", hypercube(4), 2),
    ("rgs C9 d=2 (none)", "first_distinguishing_rgs", cycle(9), 2),
]


def call(name, backend, perms, n, k):
    fn = kernels.get(name, backend)
    if name == "count_distinguishing":
        return int(fn(perms, n, k, 0, k ** n))
    examined, cols = fn(perms, n, k, 10 ** 9)
    return int(examined), tuple(int(x) for x in cols)


def best_of(repeat, f):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        f()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.HAS_NUMBA:
        raise SystemExit("numba backend unavailable (unset SYMBREAK_NUMBA=0 or install numba)")

    print(f"{'workload':<22}{'numpy s':>10}{'numba s':>10}{'speedup':>9}")
    for label, name, g, k in WORKLOADS:
        perms = _witness_perms(automorphisms(g))
        ref = call(name, "numpy", perms, g.n, k)
        got = call(name, "numba", perms, g.n, k)  # also triggers compilation
        if ref != got:
            raise SystemExit(f"{label}: backends disagree ({ref} vs {got})")
        t_np, _ = best_of(args.repeat, lambda: call(name, "numpy", perms, g.n, k))
        t_nb, _ = best_of(args.repeat, lambda: call(name, "numba", perms, g.n, k))
        print(f"{label:<22}{t_np:>10.4f}{t_nb:>10.4f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
