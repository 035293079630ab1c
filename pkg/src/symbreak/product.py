"""Distinguishing colorings of Cartesian products via holographic colorings.

For a factor ``G_i`` of ``G = G_i x Q_i``, every vertex ``v`` of ``G_i`` is
"colored" by the colored quotient layer through ``v``: the tuple of colors
of the vertices whose i-th coordinate is ``v``, listed in the row-major order
of ``Q_i``.  A coloring of the product is distinguishing exactly when

* (condition i) no isomorphism of colored factors maps ``G_i^f`` onto
  ``G_j^f`` for ``i != j``, and
* (condition ii) for each ``alpha`` in ``Aut(Q_i)`` and each non-identity
  ``beta`` in ``Aut(G_i)`` some ``v`` has layers at ``v`` and ``beta(v)`` not
  related by the lifting of ``alpha``.

Only vertex colorings are handled; edge classes of a vertex coloring are
all colored alike, so their clause never fails.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .automorphism import AutGroup, Permutation, automorphisms, group_closure
from .errors import DomainError, InputError
from .graph import Graph, ProductGraph, cartesian_product, find_isomorphism, is_isomorphic, quotient
from .indices import Coloring, threshold

log = logging.getLogger(__name__)

THETA_GENERAL_NOTE = (
    "theta_general returns max(terms) + 1; without the +1 the value disagrees "
    "with the cycle-count oracle, e.g. on K_2^2 x P_3."
)


@dataclass(frozen=True)
class HolographicColor:
    """Colored quotient layer ``Q_i`` through factor-i vertex ``anchor``."""

    factor: int
    anchor: int
    shape: tuple[int, ...]
    induced: tuple[int, ...]


@dataclass(frozen=True)
class HolographicFactorColoring:
    factor: int
    colors: tuple[HolographicColor, ...]

    def labels(self) -> list[tuple[int, ...]]:
        return [h.induced for h in self.colors]


def _colors(f: Coloring | Sequence[int]) -> tuple[int, ...]:
    return tuple(f.colors) if isinstance(f, Coloring) else tuple(int(x) for x in f)


def holographic_color(p: ProductGraph, i: int, v: int, f: Coloring | Sequence[int]) -> HolographicColor:
    cols = _colors(f)
    if len(cols) != p.n:
        raise InputError(f"coloring has length {len(cols)}, product has {p.n} vertices")
    verts = p.quotient_layer_vertices(i, v)
    return HolographicColor(i, v, p.shape, tuple(cols[u] for u in verts))


def holographic_factor_coloring(p: ProductGraph, i: int, f: Coloring | Sequence[int]) -> HolographicFactorColoring:
    return HolographicFactorColoring(i, tuple(holographic_color(p, i, v, f) for v in range(p.shape[i])))


def _lift_maps(a: Sequence[int], b: Sequence[int], alpha: Sequence[int]) -> bool:
    return all(a[x] == b[alpha[x]] for x in range(len(a)))


def _check_same_quotient(a: HolographicColor, b: HolographicColor, alpha: Permutation) -> None:
    if a.factor != b.factor or a.shape != b.shape or len(a.induced) != len(b.induced):
        raise InputError("holographic colors live over different quotients")
    if alpha.degree != len(a.induced):
        raise InputError(f"alpha acts on {alpha.degree} points, quotient has {len(a.induced)}")


def lifts_onto(a: HolographicColor, b: HolographicColor, alpha: Permutation) -> bool:
    """True iff the lifting of ``alpha`` itself carries ``a``'s coloring onto ``b``'s."""
    _check_same_quotient(a, b, alpha)
    return _lift_maps(a.induced, b.induced, alpha.images)


def alpha_equivalent(a: HolographicColor, b: HolographicColor, alpha: Permutation) -> bool:
    """True iff the lifting of ``alpha`` or of its inverse carries ``a``'s coloring onto ``b``'s."""
    _check_same_quotient(a, b, alpha)
    return (_lift_maps(a.induced, b.induced, alpha.images)
            or _lift_maps(a.induced, b.induced, alpha.inverse().images))


def _lift_to_product(perm: Permutation, p: ProductGraph, i: int) -> Permutation:
    imgs = []
    for v in range(p.n):
        c = list(p.coords(v))
        c[i] = perm(c[i])
        imgs.append(p.index(c))
    return Permutation(tuple(imgs))


def factor_group(p: ProductGraph) -> AutGroup:
    """The subgroup ``Aut(G_1) + ... + Aut(G_k)`` acting coordinatewise."""
    gens = []
    for i, f in enumerate(p.factors):
        gens.extend(_lift_to_product(g, p, i) for g in automorphisms(f).generators)
    return group_closure(gens, p.n)


@dataclass(frozen=True)
class ProductCheck:
    distinguishing: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.distinguishing

    def witness_json(self) -> str:
        return json.dumps(self.witness)


def _condition_i(p: ProductGraph, cols: tuple[int, ...]) -> dict | None:
    k = len(p.factors)
    for i in range(k):
        for j in range(i + 1, k):
            gi, gj = p.factors[i], p.factors[j]
            psi0 = find_isomorphism(gi, gj)
            if psi0 is None:
                continue
            qi, qj = quotient(p, i), quotient(p, j)
            layers_i = [p.quotient_layer_vertices(i, v) for v in range(gi.n)]
            layers_j = [p.quotient_layer_vertices(j, u) for u in range(gj.n)]
            ci = [tuple(cols[layers_i[v][x]] for v in range(gi.n)) for x in range(qi.n)]
            for beta in automorphisms(gi):
                psi = [psi0[beta(v)] for v in range(gi.n)]
                cj = [tuple(cols[layers_j[psi[v]][y]] for v in range(gi.n)) for y in range(qj.n)]
                alpha = find_isomorphism(qi, qj, ci, cj)
                if alpha is not None:
                    return {"condition": "i", "factor_i": i, "factor_j": j,
                            "alpha": Permutation(tuple(alpha)).to_cycles(),
                            "beta": Permutation(tuple(psi)).to_cycles()}
    return None


def _condition_ii(p: ProductGraph, cols: tuple[int, ...], mode: str, equivalence: str) -> dict | None:
    related = lifts_onto if equivalence == "directed" else alpha_equivalent
    for i, gi in enumerate(p.factors):
        q = quotient(p, i)
        group = automorphisms(q) if mode == "full" else factor_group(q)
        holo = holographic_factor_coloring(p, i, cols).colors
        betas = automorphisms(gi).nonidentity()
        for alpha in group:
            for beta in betas:
                if all(related(holo[v], holo[beta(v)], alpha) for v in range(gi.n)):
                    return {"condition": "ii", "factor_i": i,
                            "alpha": alpha.to_cycles(), "beta": beta.to_cycles()}
    return None


def is_distinguishing_product(p: ProductGraph, f: Coloring | Sequence[int], mode: str = "full",
                              equivalence: str = "directed") -> ProductCheck:
    """Decide whether ``f`` is distinguishing on ``p`` through the two factor conditions.

    ``mode='full'`` lets alpha range over all of ``Aut(Q_i)``; ``mode='aut_f'``
    only over the coordinatewise subgroup.  On failure the witness names the
    first violated condition.  The test is exact when the factors are the
    prime factors of the product; composite factors such as ``C_4`` can hide
    automorphisms that mix their own coordinates.

    ``equivalence='directed'`` requires one lifting of alpha to relate every
    pair ``(v, beta(v))``, which is exactly "``(alpha, beta)`` preserves f".
    ``'symmetric'`` accepts alpha or its inverse separately per vertex; it
    agrees with 'directed' whenever every element of ``Aut(Q_i)`` is an
    involution, and can wrongly reject otherwise (e.g. ``K_2 x K_3``).
    """
    if mode not in ("full", "aut_f"):
        raise InputError(f"mode must be 'full' or 'aut_f', got {mode!r}")
    if equivalence not in ("directed", "symmetric"):
        raise InputError(f"equivalence must be 'directed' or 'symmetric', got {equivalence!r}")
    if len(p.factors) < 2:
        raise InputError("need a product of at least two factors")
    cols = _colors(f)
    if len(cols) != p.n:
        raise InputError(f"coloring has length {len(cols)}, product has {p.n} vertices")
    witness = _condition_i(p, cols) or _condition_ii(p, cols, mode, equivalence)
    return ProductCheck(witness is None, witness)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``G_1^t_1 x ... x G_k^t_k`` with pairwise non-isomorphic bases.

    Primality is the caller's assertion; non-isomorphism is verified.
    """

    bases: tuple[Graph, ...]
    powers: tuple[int, ...]

    def __post_init__(self):
        if len(self.bases) != len(self.powers) or not self.bases:
            raise InputError("need one power per base and at least one base")
        if any(t < 1 for t in self.powers):
            raise InputError("powers must be >= 1")
        for a in range(len(self.bases)):
            for b in range(a + 1, len(self.bases)):
                if is_isomorphic(self.bases[a], self.bases[b]):
                    raise DomainError(f"factors {a} and {b} are isomorphic; merge them into a power")

    @classmethod
    def from_factors(cls, factors: Sequence[Graph]) -> Factorization:
        """Group a factor list into powers of pairwise non-isomorphic bases."""
        bases: list[Graph] = []
        powers: list[int] = []
        for f in factors:
            for j, b in enumerate(bases):
                if is_isomorphic(f, b):
                    powers[j] += 1
                    break
            else:
                bases.append(f)
                powers.append(1)
        return cls(tuple(bases), tuple(powers))

    @property
    def product(self) -> ProductGraph:
        return cartesian_product([b for b, t in zip(self.bases, self.powers) for _ in range(t)])


def _require_connected(g: Graph, what: str) -> None:
    if not g.is_connected():
        raise DomainError(f"{what} must be connected")


def theta_product_distinct(factors: ProductGraph | Sequence[Graph]) -> int:
    """Threshold of a product of pairwise non-isomorphic connected prime factors."""
    fs = list(factors.factors if isinstance(factors, ProductGraph) else factors)
    if len(fs) < 2:
        raise DomainError("need at least two factors")
    for a in range(len(fs)):
        _require_connected(fs[a], f"factor {a}")
        for b in range(a + 1, len(fs)):
            if is_isomorphic(fs[a], fs[b]):
                raise DomainError(f"factors {a} and {b} are isomorphic")
    total = math.prod(f.n for f in fs)
    return max((threshold(f) - 1) * (total // f.n) for f in fs) + 1


def theta_power(g: Graph, k: int) -> int:
    """Threshold of the k-th Cartesian power of a connected prime graph."""
    if k < 2:
        raise DomainError("exponent must be >= 2")
    _require_connected(g, "base graph")
    t = g.n
    value = t ** (k - 1) * max(Fraction(t + 1, 2), Fraction(threshold(g) - 1)) + 1
    if value.denominator != 1:
        raise AssertionError(f"non-integral power threshold {value}")
    return int(value)


def theta_general_terms(fz: Factorization) -> list[int]:
    """The per-base terms ``(theta(G_i^t_i) - 1) * |G| / |G_i^t_i|``."""
    total = math.prod(b.n ** t for b, t in zip(fz.bases, fz.powers))
    terms = []
    for b, t in zip(fz.bases, fz.powers):
        th = theta_power(b, t) if t >= 2 else threshold(b)
        terms.append((th - 1) * (total // b.n ** t))
    return terms


def theta_general(fz: Factorization) -> int:
    """Threshold of ``G_1^t_1 x ... x G_k^t_k``, returned as max(terms) + 1.

    See ``THETA_GENERAL_NOTE`` for why the +1 is included.
    """
    for b in fz.bases:
        _require_connected(b, "every base")
    log.info(THETA_GENERAL_NOTE)
    return max(theta_general_terms(fz)) + 1
