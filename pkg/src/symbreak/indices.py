"""Symmetry-breaking indices: D, threshold, motion bound, and exact coloring counts.

Counts are Python integers throughout.  ``N_k`` denotes the number of
colorings ``V -> {1..k}`` with trivial stabilizer; ``Phi_k = N_k / |Aut|``
because the group acts freely on those colorings.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .automorphism import (AutGroup, Permutation, SubgroupLattice, automorphisms, cycle_count,
                           motion_of, subgroup_lattice, LATTICE_MAX_ORDER)
from .errors import CapacityError, DomainError, InputError, InvariantViolation
from .graph import Graph, ProductGraph

DEFAULT_BUDGET = 20_000_000
DEFAULT_SEED = 20240229


def default_budget() -> int:
    """Enumeration budget: ``SYMBREAK_BUDGET`` if set, else 2e7 colorings."""
    raw = os.environ.get("SYMBREAK_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(float(raw))
    except ValueError:
        raise InputError(f"SYMBREAK_BUDGET must be a number, got {raw!r}") from None


def default_threads() -> int:
    """Worker threads for enumeration: ``SYMBREAK_THREADS`` if set, else the CPU count."""
    raw = os.environ.get("SYMBREAK_THREADS")
    return max(1, int(raw)) if raw else (os.cpu_count() or 1)


def _graph(g: Graph | ProductGraph) -> Graph:
    return g.graph if isinstance(g, ProductGraph) else g


def _aut(g, aut: AutGroup | None) -> AutGroup:
    return aut if aut is not None else automorphisms(g)


@dataclass(frozen=True)
class Coloring:
    """Vertex coloring with colors ``1..k``."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 1 or any(not 1 <= c <= self.k for c in self.colors):
            raise InputError(f"colors must lie in 1..{self.k}")

    @classmethod
    def of(cls, colors: Sequence[int]) -> Coloring:
        return cls(tuple(colors), max(colors) if len(colors) else 1)

    def __len__(self) -> int:
        return len(self.colors)

    def n_used(self) -> int:
        return len(set(self.colors))


def _color_array(c: Coloring | Sequence[int]) -> np.ndarray:
    return np.asarray(c.colors if isinstance(c, Coloring) else c, dtype=np.int64)


def _witness_perms(aut: AutGroup) -> np.ndarray:
    """One generator of each subgroup of prime order.

    A stabilizer is nontrivial iff it contains an element of prime order, so
    these rows suffice to decide whether a coloring is distinguishing.
    """
    rows = []
    covered: set[Permutation] = set()
    for p in aut.elements:
        if p.is_identity() or p in covered:
            continue
        order = p.order()
        if order > 1 and all(order % q for q in range(2, math.isqrt(order) + 1)):
            rows.append(p.images)
            q = p
            for _ in range(order - 1):
                covered.add(q)
                q = q * p
    return np.array(rows, dtype=np.int64).reshape(len(rows), aut.degree)


def is_distinguishing(g: Graph | ProductGraph, aut: AutGroup | None, c: Coloring | Sequence[int]) -> bool:
    """True iff no non-identity automorphism preserves ``c``."""
    aut = _aut(g, aut)
    cols = _color_array(c)
    if cols.shape != (aut.degree,):
        raise InputError(f"coloring has length {cols.size}, graph has {aut.degree} vertices")
    perms = aut.array[1:]
    return not bool(np.any(np.all(cols[perms] == cols[None, :], axis=1)))


def preserving_automorphism(aut: AutGroup, c: Coloring | Sequence[int]) -> Permutation | None:
    """Smallest non-identity automorphism preserving ``c``, if any."""
    cols = _color_array(c)
    for p in aut.elements[1:]:
        if np.array_equal(cols[list(p.images)], cols):
            return p
    return None


def threshold(g: Graph | ProductGraph, aut: AutGroup | None = None) -> int:
    """Distinguishing threshold: max cycle count of a non-identity automorphism, plus one."""
    aut = _aut(g, aut)
    if aut.is_trivial():
        return 1
    return max(cycle_count(p) for p in aut.nonidentity()) + 1


def motion_lower_bound(g: Graph | ProductGraph, aut: AutGroup | None = None) -> int:
    """``n - m(G) + 2``, a lower bound on the threshold."""
    aut = _aut(g, aut)
    return aut.degree - motion_of(g, aut) + 2


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind by the triangular recurrence."""
    if n < 0 or k < 0:
        raise DomainError("stirling2 needs n, k >= 0")
    if k > n:
        return 0
    row = [1] + [0] * k  # S(0, j)
    for i in range(1, n + 1):
        for j in range(min(i, k), 0, -1):
            row[j] = j * row[j] + row[j - 1]
        row[0] = 0
    return row[k]


def count_distinguishing_brute(g: Graph | ProductGraph, aut: AutGroup | None, k: int,
                               budget: int | None = None, threads: int | None = None,
                               backend: str | None = None) -> int:
    """Count distinguishing colorings by enumerating all ``k^n`` of them."""
    aut = _aut(g, aut)
    n = aut.degree
    if k < 0:
        raise DomainError("k must be non-negative")
    if k == 0:
        return 1 if n == 0 else 0
    budget = default_budget() if budget is None else budget
    total = k ** n
    if total > budget:
        raise CapacityError(f"{k}^{n} = {total} colorings exceeds the enumeration budget {budget}")
    perms = _witness_perms(aut)
    kernel = kernels.get("count_distinguishing", backend)
    threads = max(1, min(threads or default_threads(), total))
    bounds = [total * t // threads for t in range(threads + 1)]
    ranges = [(a, b) for a, b in zip(bounds, bounds[1:]) if b > a]
    if len(ranges) == 1:
        return int(kernel(perms, n, k, 0, total))
    with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
        parts = pool.map(lambda r: int(kernel(perms, n, k, r[0], r[1])), ranges)
        return sum(parts)


def count_distinguishing_moebius(g: Graph | ProductGraph, aut: AutGroup | None,
                                 lattice: SubgroupLattice | None, k: int) -> int:
    """``N_k = sum over subgroups H of mu(1, H) * k^(orbits of H)``."""
    aut = _aut(g, aut)
    lattice = lattice if lattice is not None else subgroup_lattice(aut)
    return sum(mu * k ** orb for mu, orb in zip(lattice.moebius, lattice.orbit_counts))


def count_distinguishing(g, aut: AutGroup | None, k: int, method: str = "auto",
                         budget: int | None = None, threads: int | None = None) -> int:
    """``N_k`` via ``method`` in {'auto', 'brute', 'moebius'}.

    'auto' prefers the Möbius sum when the lattice fits, else brute force.
    """
    aut = _aut(g, aut)
    if method == "brute":
        return count_distinguishing_brute(g, aut, k, budget, threads)
    if method == "moebius":
        return count_distinguishing_moebius(g, aut, None, k)
    if method != "auto":
        raise InputError(f"unknown counting method {method!r}")
    if aut.order <= LATTICE_MAX_ORDER:
        return count_distinguishing_moebius(g, aut, None, k)
    return count_distinguishing_brute(g, aut, k, budget, threads)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InvariantViolation(f"{what}: {num} is not divisible by {den}")
    return q


def phi(g: Graph | ProductGraph, aut: AutGroup | None, k: int, method: str = "auto",
        budget: int | None = None, threads: int | None = None) -> int:
    """Number of non-equivalent distinguishing colorings from the palette ``{1..k}``."""
    aut = _aut(g, aut)
    return _exact_div(count_distinguishing(g, aut, k, method, budget, threads), aut.order,
                      f"N_{k} / |Aut|")


def phi_from_varphi(varphis: dict[int, int], k: int) -> int:
    """``Phi_k = sum_i C(k, i) * varphi_i``."""
    return sum(math.comb(k, i) * v for i, v in varphis.items() if i <= k)


def varphi_table(g: Graph | ProductGraph, aut: AutGroup | None, k: int, method: str = "auto",
                 phis: dict[int, int] | None = None, **kw) -> dict[int, int]:
    """``varphi_1..varphi_k`` by the recursion ``varphi_k = Phi_k - sum_{i<k} C(k,i) varphi_i``.

    The sum may start at 1: every term below the distinguishing number is zero.
    """
    aut = _aut(g, aut)
    n = aut.degree
    out: dict[int, int] = {}
    for j in range(1, k + 1):
        if j > n:
            out[j] = 0
            continue
        big = phis[j] if phis and j in phis else phi(g, aut, j, method, **kw)
        out[j] = big - sum(math.comb(j, i) * out[i] for i in range(1, j))
    return out


def varphi(g: Graph | ProductGraph, aut: AutGroup | None, k: int, method: str = "auto", **kw) -> int:
    """Number of non-equivalent distinguishing colorings using exactly ``k`` colors."""
    if k < 1:
        raise DomainError("k must be positive")
    return varphi_table(g, aut, k, method, **kw)[k]


def varphi_closed(g: Graph | ProductGraph, aut: AutGroup | None, k: int) -> int:
    """``k! S(n, k) / |Aut|``, valid for ``k`` at or above the threshold."""
    aut = _aut(g, aut)
    theta = threshold(g, aut)
    if k < theta:
        raise DomainError(f"closed form needs k >= threshold = {theta}, got k = {k}")
    return _exact_div(math.factorial(k) * stirling2(aut.degree, k), aut.order, "k! S(n,k) / |Aut|")


def phi_path(n: int, k: int) -> int:
    """``Phi_k(P_n) = (k^n - k^ceil(n/2)) / 2``."""
    if n < 2 or k < 1:
        raise DomainError("phi_path needs n >= 2 and k >= 1")
    return (k ** n - k ** -(-n // 2)) // 2


def phi_complete(n: int, k: int) -> int:
    """``Phi_k(K_n) = C(k, n)`` for n >= 2."""
    if n < 2:
        raise DomainError("phi_complete needs n >= 2")
    return math.comb(k, n)


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def phi_grid(m: int, n: int, k: int) -> int:
    """Closed form for ``Phi_k(P_m x P_n)`` with ``m != n``."""
    if m == n:
        raise DomainError("phi_grid needs m != n; use phi_square_grid")
    if m < 2 or n < 2:
        raise DomainError("phi_grid needs m, n >= 2")
    if k < 1:
        raise DomainError("k must be positive")
    cm, cn = _ceil_half(m), _ceil_half(n)
    num = k ** (m * n) - k ** (m * cn) - k ** (n * cm) - k ** _ceil_half(m * n) + 2 * k ** (cm * cn)
    return _exact_div(num, 4, "grid formula numerator / 4")


def phi_square_grid(n: int, k: int) -> int:
    """Closed form for ``Phi_k(P_n x P_n)``, n >= 3."""
    if n < 3:
        raise DomainError("phi_square_grid needs n >= 3")
    if k < 1:
        raise DomainError("k must be positive")
    c, c1 = _ceil_half(n), _ceil_half(n + 1)
    num = (k ** (n * n) - k ** _ceil_half(n * n) - 2 * k ** (n * c) - 2 * k ** (n * (n + 1) // 2)
           + 2 * k ** (c * c) + 2 * k ** (c * c1))
    return _exact_div(num, 8, "square grid formula numerator / 8")


def distinguishing_number(g: Graph | ProductGraph, aut: AutGroup | None = None,
                          budget: int | None = None, backend: str | None = None) -> tuple[int, Coloring]:
    """Smallest ``d`` admitting a distinguishing coloring, with a certificate.

    For each ``d`` the search walks colorings up to renaming of colors
    (restricted growth strings) with at most ``d`` classes.
    """
    aut = _aut(g, aut)
    n = aut.degree
    if aut.is_trivial():
        return 1, Coloring((1,) * n, 1)
    budget = default_budget() if budget is None else budget
    perms = _witness_perms(aut)
    kernel = kernels.get("first_distinguishing_rgs", backend)
    for d in range(2, n + 1):
        space = sum(stirling2(n, j) for j in range(1, d + 1))
        examined, cols = kernel(perms, n, d, min(space, budget))
        if cols[0] >= 0:
            return d, Coloring(tuple(int(x) + 1 for x in cols), d)
        if examined < space:
            raise CapacityError(f"distinguishing search with {d} colors exceeded budget {budget}")
    raise InvariantViolation("all-distinct coloring should always be distinguishing")


def random_surjective_colorings(n: int, k: int, count: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """``count`` uniformly random colorings using exactly ``k`` colors (values 1..k)."""
    if not 1 <= k <= n:
        raise DomainError(f"no coloring of {n} vertices uses exactly {k} colors")
    rng = np.random.default_rng(seed)
    out = np.empty((count, n), dtype=np.int64)
    filled = 0
    while filled < count:
        batch = rng.integers(1, k + 1, size=(max(64, 2 * (count - filled)), n))
        ok = np.array([len(np.unique(row)) == k for row in batch])
        take = batch[ok][: count - filled]
        out[filled:filled + len(take)] = take
        filled += len(take)
    return out


def orbit_coloring(p: Permutation) -> Coloring:
    """Color each cycle of ``p`` with its own color; ``p`` preserves the result."""
    cols = [0] * p.degree
    for i, cyc in enumerate(p.cycles(), start=1):
        for v in cyc:
            cols[v] = i
    return Coloring(tuple(cols), cycle_count(p))


def max_cycle_automorphism(aut: AutGroup) -> Permutation:
    """First non-identity element attaining the maximum cycle count."""
    if aut.is_trivial():
        raise DomainError("graph has no non-identity automorphism")
    return max(aut.nonidentity(), key=cycle_count)


@dataclass
class IndexReport:
    graph: str
    n: int
    aut_order: int
    D: int
    theta: int
    motion: int | None
    phi: dict[int, int] = field(default_factory=dict)
    varphi: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"graph": self.graph, "n": self.n, "aut_order": self.aut_order, "D": self.D,
                "theta": self.theta, "motion": self.motion,
                "phi": {str(k): v for k, v in self.phi.items()},
                "varphi": {str(k): v for k, v in self.varphi.items()}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def header(self) -> list[str]:
        cols = ["graph", "|V|", "|Aut|", "D", "theta", "motion"]
        for k in self.phi:
            cols += [f"Phi_{k}", f"phi_{k}"]
        return cols

    def row(self) -> list:
        vals = [self.graph, self.n, self.aut_order, self.D, self.theta,
                "" if self.motion is None else self.motion]
        for k in self.phi:
            vals += [self.phi[k], self.varphi[k]]
        return vals

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header())
        w.writerow(self.row())
        return buf.getvalue()


def index_report(g: Graph | ProductGraph, ks: Iterable[int], name: str = "G",
                 aut: AutGroup | None = None, method: str = "auto", **kw) -> IndexReport:
    aut = _aut(g, aut)
    ks = sorted(set(ks))
    d, _ = distinguishing_number(g, aut, budget=kw.get("budget"))
    phis = {k: phi(g, aut, k, method, **kw) for k in ks}
    table = varphi_table(g, aut, max(ks), method, phis=phis, **kw) if ks else {}
    report = IndexReport(
        graph=name, n=aut.degree, aut_order=aut.order, D=d, theta=threshold(g, aut),
        motion=None if aut.is_trivial() else motion_of(g, aut),
        phi=phis, varphi={k: table[k] for k in ks})
    for k in ks:
        if phi_from_varphi(table, k) != phis[k]:
            raise InvariantViolation(f"Phi/varphi identity fails at k={k}")
    return report
