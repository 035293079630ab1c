"""Simple undirected graphs, named families and Cartesian products.

Product vertices are numbered row-major in their coordinate tuples (last
coordinate fastest).  A grid ``grid:m x n`` is therefore ``P_m x P_n`` with
vertex ``r*n + c`` at row ``r``, column ``c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from ._search import PairSearch
from .errors import InputError

__all__ = [
    "Graph",
    "ProductGraph",
    "FamilySpec",
    "build_graph",
    "family",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "hypercube",
    "grid",
    "cartesian_product",
    "layer",
    "quotient",
    "find_isomorphism",
    "is_isomorphic",
]


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adjacency", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        canon = set()
        for e in edges:
            try:
                u, v = e
                u, v = int(u), int(v)
            except (TypeError, ValueError):
                raise InputError(f"edge {e!r} is not a vertex pair") from None
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(r)) for r in nbrs))
        object.__setattr__(self, "_hash", hash((n, self.edges)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for u in self.adjacency[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabeled so ``vertices[j]`` becomes ``j``."""
        pos = {v: j for j, v in enumerate(vertices)}
        return Graph(len(vertices), [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos])


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


@dataclass(frozen=True)
class ProductGraph:
    """A Cartesian product together with its factorization.

    ``graph`` is numbered row-major over ``shape``; ``coords`` and ``index``
    convert between vertex ids and coordinate tuples.
    """

    graph: Graph
    factors: tuple[Graph, ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(f.n for f in self.factors)

    @property
    def n(self) -> int:
        return self.graph.n

    def coords(self, v: int) -> tuple[int, ...]:
        out = []
        for size in reversed(self.shape):
            v, r = divmod(v, size)
            out.append(r)
        return tuple(reversed(out))

    def index(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.factors):
            raise InputError(f"expected {len(self.factors)} coordinates, got {len(coords)}")
        v = 0
        for c, size in zip(coords, self.shape):
            if not 0 <= c < size:
                raise InputError(f"coordinate {tuple(coords)} outside shape {self.shape}")
            v = v * size + c
        return v

    def vertex(self, anchor: int | Sequence[int]) -> int:
        """Accept either a vertex id or a coordinate tuple."""
        if isinstance(anchor, (int,)) and not isinstance(anchor, bool):
            if not 0 <= anchor < self.n:
                raise InputError(f"vertex {anchor} outside 0..{self.n - 1}")
            return anchor
        return self.index(tuple(anchor))

    def layer_vertices(self, i: int, anchor: int | Sequence[int]) -> list[int]:
        """Vertices of the ``G_i``-layer through ``anchor``, ordered by factor-i vertex."""
        self._check_factor(i)
        c = list(self.coords(self.vertex(anchor)))
        out = []
        for j in range(self.shape[i]):
            c[i] = j
            out.append(self.index(c))
        return out

    def quotient_layer_vertices(self, i: int, v: int) -> list[int]:
        """Vertices with i-th coordinate ``v``, in the row-major order of ``Q_i``."""
        self._check_factor(i)
        if not 0 <= v < self.shape[i]:
            raise InputError(f"factor {i} has no vertex {v}")
        rest = self.shape[:i] + self.shape[i + 1:]
        out = []
        for x in range(math.prod(rest)):
            cs = []
            for size in reversed(rest):
                x, r = divmod(x, size)
                cs.append(r)
            cs.reverse()
            cs.insert(i, v)
            out.append(self.index(cs))
        return out

    def _check_factor(self, i: int) -> None:
        if not 0 <= i < len(self.factors):
            raise InputError(f"factor index {i} outside 0..{len(self.factors) - 1}")


_FAMILY_RANGES = {
    "path": (1, 1),
    "cycle": (1, 3),
    "complete": (1, 1),
    "complete_bipartite": (2, 1),
    "hypercube": (1, 1),
    "grid": (2, 2),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _FAMILY_RANGES:
            raise InputError(f"unknown graph family {self.kind!r}")
        arity, lo = _FAMILY_RANGES[self.kind]
        if len(self.params) != arity:
            raise InputError(f"{self.kind} takes {arity} parameter(s), got {len(self.params)}")
        for p in self.params:
            if not isinstance(p, int) or p < lo:
                raise InputError(f"{self.kind} parameter must be an integer >= {lo}, got {p!r}")


def path(n: int) -> Graph:
    return family(FamilySpec("path", (n,)))


def cycle(n: int) -> Graph:
    return family(FamilySpec("cycle", (n,)))


def complete(n: int) -> Graph:
    return family(FamilySpec("complete", (n,)))


def complete_bipartite(a: int, b: int) -> Graph:
    return family(FamilySpec("complete_bipartite", (a, b)))


def hypercube(k: int) -> Graph:
    return family(FamilySpec("hypercube", (k,)))


def grid(m: int, n: int) -> Graph:
    return family(FamilySpec("grid", (m, n)))


def family(spec: FamilySpec | str, *params: int) -> Graph:
    """Build a named graph: path, cycle, complete, complete_bipartite, hypercube, grid."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, tuple(params))
    kind, p = spec.kind, spec.params
    if kind == "path":
        return Graph(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if kind == "cycle":
        return Graph(p[0], [(i, (i + 1) % p[0]) for i in range(p[0])])
    if kind == "complete":
        n = p[0]
        return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if kind == "complete_bipartite":
        a, b = p
        return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])
    if kind == "hypercube":
        return cartesian_product([path(2)] * p[0]).graph
    return cartesian_product([path(p[0]), path(p[1])]).graph


def cartesian_product(factors: Sequence[Graph | ProductGraph]) -> ProductGraph:
    """Row-major Cartesian product; ProductGraph factors are flattened in place."""
    flat: list[Graph] = []
    for f in factors:
        if isinstance(f, ProductGraph):
            flat.extend(f.factors)
        elif isinstance(f, Graph):
            flat.append(f)
        else:
            raise InputError(f"not a graph: {f!r}")
    if not flat:
        raise InputError("cartesian product needs at least one factor")
    if any(f.n == 0 for f in flat):
        raise InputError("cartesian product factors must be non-empty")
    shape = [f.n for f in flat]
    # stride[i] = product of sizes after position i
    stride = [math.prod(shape[i + 1:]) for i in range(len(shape))]
    total = math.prod(shape)
    edges = []
    for v in range(total):
        for i, f in enumerate(flat):
            ci = (v // stride[i]) % shape[i]
            for cj in f.adjacency[ci]:
                if cj > ci:
                    edges.append((v, v + (cj - ci) * stride[i]))
    return ProductGraph(Graph(total, edges), tuple(flat))


def layer(p: ProductGraph, i: int, anchor: int | Sequence[int]) -> tuple[Graph, list[int]]:
    """The ``G_i``-layer through ``anchor`` and its embedding (factor vertex -> product vertex)."""
    emb = p.layer_vertices(i, anchor)
    return p.graph.induced(emb), emb


def quotient(p: ProductGraph, i: int) -> ProductGraph:
    """Product of all factors except factor ``i``."""
    if len(p.factors) < 2:
        raise InputError("quotient needs a product with at least two factors")
    p._check_factor(i)
    return cartesian_product(p.factors[:i] + p.factors[i + 1:])


def _adj(g: Graph | ProductGraph) -> Graph:
    return g.graph if isinstance(g, ProductGraph) else g


def find_isomorphism(g: Graph | ProductGraph, h: Graph | ProductGraph,
                     g_colors: Sequence[Hashable] | None = None,
                     h_colors: Sequence[Hashable] | None = None) -> list[int] | None:
    """Return a (color-preserving) isomorphism ``g -> h`` as an image list, or None.

    Colors may be any hashable labels; a vertex may only map to a vertex with
    an equal label.
    """
    g, h = _adj(g), _adj(h)
    if g.n != h.n or g.m != h.m:
        return None
    if g_colors is not None and sorted(map(repr, g_colors)) != sorted(map(repr, h_colors)):
        return None
    search = PairSearch(g.adjacency, h.adjacency, g_colors, h_colors)
    return search.first_leaf(search.root)


def is_isomorphic(g: Graph | ProductGraph, h: Graph | ProductGraph,
                  g_colors: Sequence[Hashable] | None = None,
                  h_colors: Sequence[Hashable] | None = None) -> bool:
    return find_isomorphism(g, h, g_colors, h_colors) is not None
