"""Closed forms checked against enumeration oracles; backs ``symbreak verify``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .automorphism import automorphisms
from .errors import CapacityError
from .graph import Graph, cartesian_product, complete, complete_bipartite, cycle, hypercube, path
from .indices import (DEFAULT_SEED, count_distinguishing_brute, count_distinguishing_moebius,
                      distinguishing_number, is_distinguishing, max_cycle_automorphism,
                      motion_lower_bound, orbit_coloring, phi_from_varphi, phi_grid, phi_square_grid,
                      random_surjective_colorings, threshold, varphi_closed, varphi_table)
from .product import (Factorization, is_distinguishing_product, theta_general, theta_power,
                      theta_product_distinct)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}  {self.detail}".rstrip()


def _oracle_n(g, aut, k: int, budget: int | None) -> tuple[int, str]:
    try:
        return count_distinguishing_brute(g, aut, k, budget), "brute"
    except CapacityError:
        return count_distinguishing_moebius(g, aut, None, k), "moebius"


def verify_grids(ms: Iterable[int], ns: Iterable[int], ks: Iterable[int],
                 budget: int | None = None) -> list[Check]:
    out = []
    ks = list(ks)
    for m, n in itertools.product(list(ms), list(ns)):
        if m == n and m < 3:
            continue  # P_2 x P_2 = C_4 is outside both grid formulas
        p = cartesian_product([path(m), path(n)])
        aut = automorphisms(p)
        for k in ks:
            closed = phi_square_grid(m, k) if m == n else phi_grid(m, n, k)
            count, how = _oracle_n(p, aut, k, budget)
            oracle, rem = divmod(count, aut.order)
            out.append(Check(f"grid P{m}xP{n} k={k}", rem == 0 and closed == oracle,
                             f"closed={closed} oracle({how})={oracle}"))
    return out


def verify_thresholds(ms: Iterable[int] = range(2, 11), ns: Iterable[int] = range(3, 11)) -> list[Check]:
    out = []
    for m in ms:
        got, want = threshold(path(m)), -(-m // 2) + 1
        out.append(Check(f"theta(P{m})", got == want, f"cycle_count={got} formula={want}"))
    for n in ns:
        got, want = threshold(cycle(n)), n // 2 + 2
        out.append(Check(f"theta(C{n})", got == want, f"cycle_count={got} formula={want}"))
    return out


PRODUCT_DISTINCT = {
    "P2xP3": [path(2), path(3)],
    "P2xP4": [path(2), path(4)],
    "P2xC3": [path(2), cycle(3)],
    "P4xP5": [path(4), path(5)],
}
PRODUCT_POWERS = {"K2^2": (path(2), 2), "K3^2": (complete(3), 2), "K2^3": (path(2), 3)}
PRODUCT_GENERAL = {"K2^2xP3": [path(2), path(2), path(3)]}


def verify_products() -> list[Check]:
    out = []
    for name, fs in PRODUCT_DISTINCT.items():
        got, want = theta_product_distinct(fs), threshold(cartesian_product(fs))
        out.append(Check(f"distinct-factor theta {name}", got == want, f"closed={got} cycle_count={want}"))
    for name, (g, k) in PRODUCT_POWERS.items():
        got, want = theta_power(g, k), threshold(cartesian_product([g] * k))
        out.append(Check(f"power theta {name}", got == want, f"closed={got} cycle_count={want}"))
    for name, fs in PRODUCT_GENERAL.items():
        fz = Factorization.from_factors(fs)
        got, want = theta_general(fz), threshold(fz.product)
        out.append(Check(f"general theta {name}", got == want, f"closed(+1)={got} cycle_count={want}"))
    return out


EXACT_COLOR_FIXTURES = {"P3": path(3), "P4": path(4), "C4": cycle(4), "C5": cycle(5)}


def verify_exact_colors() -> list[Check]:
    out = []
    for name, g in EXACT_COLOR_FIXTURES.items():
        aut = automorphisms(g)
        table = varphi_table(g, aut, g.n)
        theta = threshold(g, aut)
        for k in range(theta, g.n + 1):
            got, want = varphi_closed(g, aut, k), table[k]
            out.append(Check(f"varphi_{k}({name})", got == want, f"closed={got} recursion={want}"))
        for k in range(1, g.n + 1):
            n_k = count_distinguishing_brute(g, aut, k)
            ok = phi_from_varphi(table, k) * aut.order == n_k
            out.append(Check(f"Phi<->varphi round trip k={k} ({name})", ok))
    return out


def _red(p, cells) -> list[int]:
    cols = [1] * p.n
    for cell in cells:
        cols[p.index([c - 1 for c in cell])] = 2
    return cols


EXAMPLES = {
    # (factors, red cells in 1-based factor coordinates, expected)
    "P4xP5 red (2,2),(3,4)": ((4, 5), [(2, 2), (3, 4)], False),
    "P5xP6 red (2,2),(2,3),(2,4),(4,5)": ((5, 6), [(2, 2), (2, 3), (2, 4), (4, 5)], True),
    "P4xP5 red (2,4),(3,2),(3,3)": ((4, 5), [(2, 4), (3, 2), (3, 3)], True),
}


def example_coloring(name: str):
    (m, n), cells, expected = EXAMPLES[name]
    p = cartesian_product([path(m), path(n)])
    return p, _red(p, cells), expected


def verify_product_checker() -> list[Check]:
    out = []
    p = cartesian_product([path(2), path(3)])
    aut = automorphisms(p)
    bad = 0
    for c in itertools.product((1, 2), repeat=p.n):
        direct = is_distinguishing(p, aut, c)
        for mode in ("full", "aut_f"):
            bad += is_distinguishing_product(p, c, mode).distinguishing != direct
    out.append(Check("factor-wise checker vs direct, 64 two-colorings of P2xP3", bad == 0, f"mismatches={bad}"))
    for name in EXAMPLES:
        p, cols, expected = example_coloring(name)
        got = is_distinguishing_product(p, cols).distinguishing
        out.append(Check(name, got == expected, f"checker={got} expected={expected}"))
    return out


D_FIXTURES = {
    **{f"P{n}": (path(n), 2) for n in range(2, 7)},
    "C5": (cycle(5), 3), "C6": (cycle(6), 2), "K4": (complete(4), 4),
    "K3,3": (complete_bipartite(3, 3), 4), "Q4": (hypercube(4), 2),
}


def verify_distinguishing() -> list[Check]:
    out = []
    for name, (g, want) in D_FIXTURES.items():
        got, cert = distinguishing_number(g)
        ok = got == want and is_distinguishing(g, None, cert)
        out.append(Check(f"D({name})", ok, f"search={got} expected={want}"))
    return out


SYMMETRIC_FIXTURES: dict[str, Graph] = {
    **{f"P{n}": path(n) for n in range(2, 7)},
    **{f"C{n}": cycle(n) for n in range(3, 8)},
    "K4": complete(4), "K3,3": complete_bipartite(3, 3), "Q3": hypercube(3),
    "P2xP3": cartesian_product([path(2), path(3)]).graph,
    "P3xP3": cartesian_product([path(3), path(3)]).graph,
    "P4xP5": cartesian_product([path(4), path(5)]).graph,
}


def verify_motion() -> list[Check]:
    out = []
    for name, g in SYMMETRIC_FIXTURES.items():
        theta, bound = threshold(g), motion_lower_bound(g)
        out.append(Check(f"motion bound {name}", theta >= bound, f"theta={theta} n-m+2={bound}"))
    return out


def verify_saturation(seed: int = DEFAULT_SEED, samples: int = 200) -> list[Check]:
    out = []
    for name, g in SYMMETRIC_FIXTURES.items():
        aut = automorphisms(g)
        theta = threshold(g, aut)
        cols = random_surjective_colorings(g.n, theta, samples, seed)
        ok_all = all(is_distinguishing(g, aut, c) for c in cols)
        below = orbit_coloring(max_cycle_automorphism(aut))
        ok_below = below.n_used() == theta - 1 and not is_distinguishing(g, aut, below)
        out.append(Check(f"saturation {name}", ok_all and ok_below,
                         f"theta={theta} sampled_all_distinguishing={ok_all} "
                         f"orbit_coloring_fails={ok_below}"))
    return out


TARGETS = {
    "grids": lambda a: verify_grids(a.m or range(2, 5), a.n or range(2, 5), a.k, a.budget),
    "thresholds": lambda a: verify_thresholds(a.m or range(2, 11), a.n or range(3, 11)),
    "products": lambda a: verify_products(),
    "exact-colors": lambda a: verify_exact_colors(),
    "product-checker": lambda a: verify_product_checker(),
    "distinguishing": lambda a: verify_distinguishing(),
    "motion": lambda a: verify_motion(),
    "saturation": lambda a: verify_saturation(a.seed),
}
