"""Exact automorphism groups of small graphs.

The search individualizes along a leftmost path of the refinement tree and,
level by level from the bottom, finds one automorphism per new image of the
individualized vertex (orbit pruning).  The collected generators are closed
into the full element list, which every downstream count iterates.

Bounds: graphs up to ``MAX_VERTICES`` vertices and groups up to
``MAX_ORDER`` elements; the subgroup lattice is built for groups up to
``LATTICE_MAX_ORDER``.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

from ._search import PairSearch, individualize, refine, target_cell
from .errors import CapacityError, DomainError, InputError
from .graph import Graph, ProductGraph

MAX_VERTICES = 64
MAX_ORDER = 200_000
LATTICE_MAX_ORDER = 64


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of ``0..n-1`` stored as its image list."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise InputError(f"not a permutation: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> Permutation:
        """Parse cycle notation such as ``(0 3)(1 2)``; unlisted points are fixed."""
        imgs = list(range(n))
        if not re.fullmatch(r"\s*(\(\s*(\d+[\s,]*)*\)\s*)*", text):
            raise InputError(f"bad cycle notation: {text!r}")
        seen = set()
        for body in re.findall(r"\(([^)]*)\)", text):
            pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                if a >= n or a in seen:
                    raise InputError(f"bad cycle notation: {text!r}")
                imgs[a] = b
            seen.update(pts)
        return cls(tuple(imgs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``(self * other)(v) = self(other(v))``."""
        a = self.images
        return Permutation(tuple(a[x] for x in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles including fixed points, each starting at its least element."""
        seen = [False] * len(self.images)
        out = []
        for s in range(len(self.images)):
            if seen[s]:
                continue
            cyc = []
            v = s
            while not seen[v]:
                seen[v] = True
                cyc.append(v)
                v = self.images[v]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.images else 1

    def to_cycles(self) -> str:
        s = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1)
        return s or "()"

    def __str__(self) -> str:
        return self.to_cycles()


def cycle_count(p: Permutation) -> int:
    """Number of cycles of ``p``, fixed points included."""
    return len(p.cycles())


def motion(p: Permutation) -> int:
    """Number of points moved by ``p``."""
    return sum(1 for i, x in enumerate(p.images) if i != x)


def _as_graph(g: Graph | ProductGraph) -> Graph:
    return g.graph if isinstance(g, ProductGraph) else g


@dataclass(frozen=True)
class AutGroup:
    """Fully enumerated permutation group, elements sorted by image tuple."""

    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._index

    @cached_property
    def _index(self) -> dict[Permutation, int]:
        return {p: i for i, p in enumerate(self.elements)}

    @cached_property
    def array(self) -> np.ndarray:
        """Elements as an ``(order, degree)`` int64 array."""
        return np.array([p.images for p in self.elements], dtype=np.int64).reshape(self.order, self.degree)

    def nonidentity(self) -> list[Permutation]:
        return [p for p in self.elements if not p.is_identity()]

    def is_trivial(self) -> bool:
        return self.order == 1

    def to_dict(self, include_elements: bool = False) -> dict:
        d = {"order": self.order, "degree": self.degree,
             "generators": [p.to_cycles() for p in self.generators]}
        if include_elements:
            d["elements"] = [p.to_cycles() for p in self.elements]
        return d

    def to_json(self, include_elements: bool = False) -> str:
        return json.dumps(self.to_dict(include_elements))

    @classmethod
    def from_json(cls, text: str) -> AutGroup:
        d = json.loads(text)
        n = d["degree"]
        gens = [Permutation.from_cycles(s, n) for s in d["generators"]]
        group = group_closure(gens, n)
        if group.order != d["order"]:
            raise InputError(f"generators produce order {group.order}, expected {d['order']}")
        return group


def group_closure(generators: Iterable[Permutation], n: int, max_order: int = MAX_ORDER) -> AutGroup:
    gens = [g for g in generators if not g.is_identity()]
    ident = Permutation.identity(n)
    seen = {ident.images}
    frontier = [ident.images]
    gen_imgs = [g.images for g in gens]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gen_imgs:
                c = tuple(g[x] for x in a)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
                    if len(seen) > max_order:
                        raise CapacityError(f"group order exceeds bound {max_order}")
        frontier = nxt
    elements = tuple(Permutation(t) for t in sorted(seen))
    return AutGroup(n, elements, tuple(_prune_generators(gens, n, len(elements))))


def _prune_generators(gens: list[Permutation], n: int, order: int) -> list[Permutation]:
    """Drop generators whose removal keeps the generated order."""
    kept = list(gens)
    for g in list(gens):
        trial = [h for h in kept if h != g]
        if _order_of(trial, n) == order:
            kept = trial
    return kept


def _order_of(gens: list[Permutation], n: int) -> int:
    seen = {tuple(range(n))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(g.images[x] for x in a)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return len(seen)


def _orbit(v: int, gens: list[list[int]]) -> set[int]:
    orb = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orb:
                orb.add(y)
                stack.append(y)
    return orb


def automorphisms(g: Graph | ProductGraph, colors: Sequence[Hashable] | None = None,
                  max_order: int = MAX_ORDER) -> AutGroup:
    """Enumerate the (color-preserving) automorphism group of ``g``.

    Raises CapacityError above ``MAX_VERTICES`` vertices or ``max_order`` elements.
    """
    g = _as_graph(g)
    n = g.n
    if n > MAX_VERTICES:
        raise CapacityError(f"automorphism search supports at most {MAX_VERTICES} vertices, got {n}")
    if n == 0:
        return AutGroup(0, (Permutation(()),), ())
    search = PairSearch(g.adjacency, g.adjacency, colors, colors)

    # leftmost path: (colors before individualization, target cell, chosen vertex)
    path = []
    cols = search.root
    while True:
        cell = target_cell(cols, n)
        if cell is None:
            break
        v = next(i for i in range(n) if cols[i] == cell)
        path.append((cols, cell, v))
        cols = refine(search.adj, individualize(cols, v, v + n))

    gens: list[list[int]] = []
    order = 1
    for cols, cell, v in reversed(path):
        orb = _orbit(v, gens)
        for w in range(n):
            if cols[w + n] != cell or w in orb:
                continue
            found = search.first_leaf(individualize(cols, v, w + n))
            if found is not None:
                gens.append(found)
                orb = _orbit(v, gens)
        order *= len(orb)
        if order > max_order:
            raise CapacityError(f"automorphism group order exceeds bound {max_order}")
    group = group_closure([Permutation(tuple(x)) for x in gens], n, max_order)
    if group.order != order:
        raise AssertionError(f"orbit product {order} disagrees with closure order {group.order}")
    return group


def motion_of(g: Graph | ProductGraph, aut: AutGroup | None = None) -> int:
    """Minimum number of vertices moved by a non-identity automorphism."""
    aut = aut if aut is not None else automorphisms(g)
    if aut.is_trivial():
        raise DomainError("motion is undefined for a graph with trivial automorphism group")
    return min(motion(p) for p in aut.nonidentity())


def _check_closed(elements: Sequence[Permutation]) -> None:
    s = set(elements)
    if not s:
        raise InputError("empty permutation set")
    for a in s:
        for b in s:
            if a * b not in s:
                raise InputError("permutation set is not closed under composition")


def orbit_count(group_subset: Iterable[Permutation], check: bool = True) -> int:
    """Number of orbits of the vertex action of a permutation group."""
    elems = list(group_subset)
    if check:
        _check_closed(elems)
    n = elems[0].degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in elems:
        for i, x in enumerate(p.images):
            a, b = find(i), find(x)
            if a != b:
                parent[a] = b
    return sum(1 for i in range(n) if find(i) == i)


@dataclass(frozen=True)
class SubgroupLattice:
    """All subgroups of an AutGroup, as sorted tuples of element indices.

    ``moebius[j]`` is the Möbius value between the trivial subgroup and
    ``subgroups[j]``.  Subgroups are ordered by size, trivial first.
    """

    group: AutGroup
    subgroups: tuple[tuple[int, ...], ...]
    moebius: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.subgroups)

    def elements(self, j: int) -> list[Permutation]:
        return [self.group.elements[i] for i in self.subgroups[j]]

    def contains(self, big: int, small: int) -> bool:
        return set(self.subgroups[small]) <= set(self.subgroups[big])

    @cached_property
    def orbit_counts(self) -> tuple[int, ...]:
        return tuple(orbit_count(self.elements(j), check=False) for j in range(len(self)))


def _closure_mask(mask: int, mult: list[list[int]]) -> int:
    members = [i for i in range(len(mult)) if mask >> i & 1]
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            for b in members:
                for c in (mult[a][b], mult[b][a]):
                    if not mask >> c & 1:
                        mask |= 1 << c
                        members.append(c)
                        nxt.append(c)
        frontier = nxt
    return mask


def subgroup_lattice(group: AutGroup, max_order: int = LATTICE_MAX_ORDER) -> SubgroupLattice:
    """Enumerate every subgroup by closing joins of cyclic subgroups.

    Each subgroup is generated by its cyclic subgroups, so repeatedly joining
    a known subgroup with a cyclic one reaches the whole lattice.
    """
    if group.order > max_order:
        raise CapacityError(f"subgroup lattice supports groups of order <= {max_order}, got {group.order}")
    els = group.elements
    idx = group._index
    mult = [[idx[a * b] for b in els] for a in els]
    identity_mask = 1  # identity is elements[0]
    cyclic = set()
    for i in range(len(els)):
        cyclic.add(_closure_mask(identity_mask | 1 << i, mult))
    found = {identity_mask} | cyclic
    frontier = list(found)
    while frontier:
        nxt = []
        for h in frontier:
            for c in cyclic:
                if c & ~h:
                    j = _closure_mask(h | c, mult)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
        frontier = nxt
    masks = sorted(found, key=lambda m: (bin(m).count("1"), m))
    mu: list[int] = []
    for j, h in enumerate(masks):
        if j == 0:
            mu.append(1)
            continue
        mu.append(-sum(mu[i] for i in range(j) if masks[i] & ~h == 0))
    subgroups = tuple(tuple(i for i in range(len(els)) if m >> i & 1) for m in masks)
    return SubgroupLattice(group, subgroups, tuple(mu))
