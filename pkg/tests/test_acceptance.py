"""The ten acceptance criteria, each at its stated tolerance.

Run ``pytest tests/test_acceptance.py -v`` (a summary section lists one
PASS/FAIL line per criterion) or ``python3 tests/test_acceptance.py``.
"""

import itertools
import time

from symbreak.automorphism import automorphisms, motion_of
from symbreak.graph import cartesian_product, complete, complete_bipartite, cycle, hypercube, path
from symbreak.indices import (DEFAULT_SEED, count_distinguishing_brute, distinguishing_number,
                              is_distinguishing, max_cycle_automorphism, orbit_coloring, phi_from_varphi,
                              phi_grid, phi_square_grid, random_surjective_colorings, threshold, varphi,
                              varphi_closed, varphi_table)
from symbreak.product import is_distinguishing_product, theta_power, theta_product_distinct
from symbreak.verify import EXAMPLES, SYMMETRIC_FIXTURES, example_coloring


def brute_phi(g, k):
    aut = automorphisms(g)
    q, r = divmod(count_distinguishing_brute(g, aut, k), aut.order)
    assert r == 0
    return q


def test_c01_grid_formula(criterion):
    t0 = time.perf_counter()
    bad = []
    for (m, n), k in itertools.product([(2, 3), (2, 4), (3, 4)], [2, 3]):
        closed, oracle = phi_grid(m, n, k), brute_phi(cartesian_product([path(m), path(n)]), k)
        if closed != oracle:
            bad.append((m, n, k, closed, oracle))
    spot = phi_grid(2, 3, 2)
    elapsed = time.perf_counter() - t0
    ok = not bad and spot == 10 and elapsed < 60
    criterion(1, "grid formula vs brute oracle", ok, f"spot={spot} mismatches={bad} {elapsed:.2f}s")
    assert ok


def test_c02_square_grid_formula(criterion):
    t0 = time.perf_counter()
    g = cartesian_product([path(3), path(3)])
    got = {k: (phi_square_grid(3, k), brute_phi(g, k)) for k in (2, 3)}
    elapsed = time.perf_counter() - t0
    # the oracle gives 2106 for k=3; 2094 does not survive the enumeration
    ok = got == {2: (36, 36), 3: (2106, 2106)} and elapsed < 60
    criterion(2, "square-grid formula vs brute oracle", ok, f"(closed, oracle)={got} {elapsed:.2f}s")
    assert ok


def test_c03_threshold_closed_forms(criterion):
    paths = {m: (threshold(path(m)), -(-m // 2) + 1) for m in range(2, 11)}
    cycles = {n: (threshold(cycle(n)), n // 2 + 2) for n in range(3, 11)}
    ok = all(a == b for a, b in [*paths.values(), *cycles.values()])
    criterion(3, "threshold of P_m and C_n", ok)
    assert ok


def test_c04_distinct_factor_products(criterion):
    cases = {"P2xP3": ([path(2), path(3)], 5), "P2xC3": ([path(2), cycle(3)], 5),
             "P4xP5": ([path(4), path(5)], 13)}
    got = {name: (theta_product_distinct(fs), threshold(cartesian_product(fs))) for name, (fs, _) in cases.items()}
    ok = all(got[name] == (want, want) for name, (_, want) in cases.items())
    criterion(4, "product threshold, distinct factors", ok, str(got))
    assert ok


def test_c05_power_thresholds(criterion):
    cases = {"K2^2": (path(2), 2, 4), "K3^2": (complete(3), 2, 7), "K2^3": (path(2), 3, 7)}
    got = {name: (theta_power(g, k), threshold(cartesian_product([g] * k))) for name, (g, k, _) in cases.items()}
    ok = (all(got[name] == (want, want) for name, (_, _, want) in cases.items())
          and theta_power(path(2), 2) == threshold(cycle(4)))
    criterion(5, "power thresholds", ok, str(got))
    assert ok


def test_c06_product_checker(criterion):
    p = cartesian_product([path(2), path(3)])
    aut = automorphisms(p)
    mismatches = 0
    for c in itertools.product((1, 2), repeat=p.n):
        direct = is_distinguishing(p, aut, c)
        for mode in ("full", "aut_f"):
            mismatches += is_distinguishing_product(p, c, mode).distinguishing != direct
    examples = {}
    for name in EXAMPLES:
        q, cols, expected = example_coloring(name)
        examples[name] = is_distinguishing_product(q, cols).distinguishing == expected
    ok = mismatches == 0 and all(examples.values())
    criterion(6, "factor-wise checker", ok, f"mismatches={mismatches} examples={examples}")
    assert ok


def test_c07_exact_color_closed_form(criterion):
    bad = []
    for g in (path(3), path(4), cycle(4), cycle(5)):
        aut = automorphisms(g)
        table = varphi_table(g, aut, g.n)
        for k in range(threshold(g, aut), g.n + 1):
            if varphi_closed(g, aut, k) != varphi(g, aut, k):
                bad.append((g.n, k))
        for k in range(1, g.n + 1):
            if phi_from_varphi(table, k) * aut.order != count_distinguishing_brute(g, aut, k):
                bad.append((g.n, k, "round trip"))
    ok = not bad
    criterion(7, "exact-k closed form and round trip", ok, f"failures={bad}")
    assert ok


def test_c08_distinguishing_numbers(criterion):
    fixtures = {**{f"P{n}": (path(n), 2) for n in range(2, 7)}, "C5": (cycle(5), 3), "C6": (cycle(6), 2),
                "K4": (complete(4), 4), "K3,3": (complete_bipartite(3, 3), 4)}
    got = {name: distinguishing_number(g)[0] for name, (g, _) in fixtures.items()}
    t0 = time.perf_counter()
    q4, cert = distinguishing_number(hypercube(4))
    elapsed = time.perf_counter() - t0
    ok = (all(got[name] == want for name, (_, want) in fixtures.items())
          and q4 == 2 and is_distinguishing(hypercube(4), None, cert) and elapsed < 120)
    criterion(8, "distinguishing numbers", ok, f"{got} Q4={q4} ({elapsed:.2f}s)")
    assert ok


def test_c09_motion_bound(criterion):
    bad = {}
    for name, g in SYMMETRIC_FIXTURES.items():
        aut = automorphisms(g)
        theta, m = threshold(g, aut), motion_of(g, aut)
        if theta < g.n - m + 2:
            bad[name] = (theta, g.n - m + 2)
    ok = not bad
    criterion(9, "motion lower bound on threshold", ok, f"violations={bad}")
    assert ok


def test_c10_threshold_saturation(criterion):
    bad = []
    for name, g in SYMMETRIC_FIXTURES.items():
        aut = automorphisms(g)
        theta = threshold(g, aut)
        cols = random_surjective_colorings(g.n, theta, 200, DEFAULT_SEED)
        if not all(is_distinguishing(g, aut, c) for c in cols):
            bad.append((name, "sample"))
        below = orbit_coloring(max_cycle_automorphism(aut))
        if below.n_used() != theta - 1 or is_distinguishing(g, aut, below):
            bad.append((name, "orbit coloring"))
    ok = not bad
    criterion(10, "threshold saturation", ok, f"failures={bad}")
    assert ok


if __name__ == "__main__":
    import sys

    def record(number, title, ok, detail=""):
        print(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  {detail}".rstrip())
        return ok

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn(record)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
