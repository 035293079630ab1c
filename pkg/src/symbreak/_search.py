"""Individualization-refinement search over pairs of vertex-colored graphs.

Both the automorphism enumerator and the isomorphism tester run on the
disjoint union of a "left" and a "right" graph.  Refining the union makes
the color ids comparable across sides: a color id is a function of
invariants only, never of which side produced it.
"""

from __future__ import annotations

from typing import Hashable, Sequence

Adjacency = Sequence[Sequence[int]]


def union_adjacency(left: Adjacency, right: Adjacency) -> list[tuple[int, ...]]:
    n = len(left)
    return [tuple(row) for row in left] + [tuple(u + n for u in row) for row in right]


def initial_colors(left: Sequence[Hashable] | None, right: Sequence[Hashable] | None,
                   n_left: int, n_right: int) -> list[int]:
    """Map arbitrary vertex labels to shared integer ids (sorted by repr for determinism)."""
    if left is None and right is None:
        return [0] * (n_left + n_right)
    if left is None or right is None:
        raise ValueError("colors must be given for both graphs or neither")
    labels = sorted(set(left) | set(right), key=repr)
    ids = {lab: i for i, lab in enumerate(labels)}
    return [ids[c] for c in left] + [ids[c] for c in right]


def refine(adj: Adjacency, colors: list[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors`` on the graph ``adj``.

    New ids are ranks of the signature (old color, sorted neighbor colors), so
    the result is invariant under relabeling of vertices.
    """
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        colors, ncolors = new, len(rank)


def balanced(colors: Sequence[int], n: int) -> bool:
    """True when the left half and right half carry the same color multiset."""
    counts: dict[int, int] = {}
    for c in colors[:n]:
        counts[c] = counts.get(c, 0) + 1
    for c in colors[n:]:
        k = counts.get(c, 0)
        if k == 0:
            return False
        counts[c] = k - 1
    return True


def target_cell(colors: Sequence[int], n: int) -> int | None:
    """Color id of the first non-singleton cell on the left, or None if discrete."""
    seen: dict[int, int] = {}
    for c in colors[:n]:
        seen[c] = seen.get(c, 0) + 1
    multi = [c for c, k in seen.items() if k > 1]
    return min(multi) if multi else None


def individualize(colors: Sequence[int], v: int, w: int) -> list[int]:
    """Give left vertex ``v`` and right vertex ``w`` (union index) a fresh shared color."""
    out = list(colors)
    fresh = max(out) + 1
    out[v] = fresh
    out[w] = fresh
    return out


def leaf_map(colors: Sequence[int], n: int) -> list[int]:
    where = {c: i - n for i, c in enumerate(colors[n:], start=n)}
    return [where[c] for c in colors[:n]]


def is_isomorphism(mapping: Sequence[int], left: Adjacency, right_sets: Sequence[set[int]]) -> bool:
    for u, row in enumerate(left):
        mu = mapping[u]
        for v in row:
            if mapping[v] not in right_sets[mu]:
                return False
    return True


class PairSearch:
    """Search context for mappings from a left graph onto a right graph.

    Left and right must have equal order; edge counts are the caller's concern.
    """

    def __init__(self, left: Adjacency, right: Adjacency,
                 left_colors: Sequence[Hashable] | None = None,
                 right_colors: Sequence[Hashable] | None = None):
        self.n = len(left)
        self.left = left
        self.adj = union_adjacency(left, right)
        self.right_sets = [set(row) for row in right]
        self.root = refine(self.adj, initial_colors(left_colors, right_colors, self.n, len(right)))

    def first_leaf(self, colors: list[int]) -> list[int] | None:
        """Depth-first search below ``colors``; return the first valid mapping found."""
        n = self.n
        colors = refine(self.adj, colors)
        if not balanced(colors, n):
            return None
        cell = target_cell(colors, n)
        if cell is None:
            mapping = leaf_map(colors, n)
            return mapping if is_isomorphism(mapping, self.left, self.right_sets) else None
        v = next(i for i in range(n) if colors[i] == cell)
        for w in range(n, 2 * n):
            if colors[w] == cell:
                found = self.first_leaf(individualize(colors, v, w))
                if found is not None:
                    return found
        return None
