"""Text formats: edge lists, the family DSL, k ranges and coloring strings.

Family DSL: ``path:4``, ``cycle:6``, ``complete:5``, ``kbipartite:3,3``,
``hypercube:4``, ``grid:4x5`` and ``file:PATH``.  A product expression joins
specs with a whitespace-delimited ``x`` and folds left: ``path:4 x path:5``.
Grids and hypercubes parse to products of paths and ``K_2`` respectively.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import InputError
from .graph import FamilySpec, Graph, ProductGraph, cartesian_product, family, path

_KIND_ALIASES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "kbipartite": "complete_bipartite",
    "complete_bipartite": "complete_bipartite",
    "hypercube": "hypercube",
    "grid": "grid",
}


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {line!r}") from None
        if len(vals) != 2:
            raise InputError(f"line {lineno}: expected two integers, got {line!r}")
        rows.append((lineno, vals))
    if not rows:
        raise InputError("empty edge list")
    (_, (n, m)), body = rows[0], rows[1:]
    if len(body) != m:
        raise InputError(f"header announces {m} edges, found {len(body)}")
    return Graph(n, [tuple(v) for _, v in body])


def format_edge_list(g: Graph | ProductGraph) -> str:
    g = g.graph if isinstance(g, ProductGraph) else g
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path_: str | Path) -> Graph:
    try:
        text = Path(path_).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path_}: {exc.strerror or exc}") from None
    return parse_edge_list(text)


def _parse_factor(token: str, offset: int) -> Graph | ProductGraph:
    if token.startswith("file:"):
        return read_edge_list(token[5:])
    m = re.fullmatch(r"([a-z_]+):(.+)", token)
    if not m:
        raise InputError(f"syntax error at position {offset}: expected KIND:PARAMS, got {token!r}")
    kind = _KIND_ALIASES.get(m.group(1))
    if kind is None:
        raise InputError(f"syntax error at position {offset}: unknown family {m.group(1)!r}")
    sep = "x" if kind == "grid" else ","
    try:
        params = tuple(int(p) for p in m.group(2).split(sep))
    except ValueError:
        pos = offset + m.start(2)
        raise InputError(f"syntax error at position {pos}: bad parameters {m.group(2)!r}") from None
    spec = FamilySpec(kind, params)
    if kind == "grid":
        return cartesian_product([path(params[0]), path(params[1])])
    if kind == "hypercube":
        return cartesian_product([path(2)] * params[0])
    return family(spec)


def parse_graph_spec(text: str) -> Graph | ProductGraph:
    """Parse a family spec, ``file:PATH``, or a product expression of those."""
    text = text.strip()
    if not text:
        raise InputError("syntax error at position 0: empty graph spec")
    pieces = []
    pos = 0
    for m in re.finditer(r"\s+x\s+", text):
        pieces.append((text[pos:m.start()], pos))
        pos = m.end()
    pieces.append((text[pos:], pos))
    factors = [_parse_factor(tok, off) for tok, off in pieces]
    if len(factors) == 1:
        return factors[0]
    return cartesian_product(factors)


def parse_range(text: str) -> list[int]:
    """``3`` -> [3]; ``2..4`` -> [2, 3, 4]; ``2,5`` -> [2, 5]."""
    out: list[int] = []
    for part in str(text).split(","):
        part = part.strip()
        m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", part)
        try:
            if m:
                lo, hi = int(m.group(1)), int(m.group(2))
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise InputError(f"bad integer range {text!r}") from None
    if not out:
        raise InputError(f"empty range {text!r}")
    return out


def parse_coloring(text: str, g: Graph | ProductGraph) -> list[int]:
    """Parse ``1,2,1,...`` (vertex order) or ``red=(i,j),(i,j)`` (1-based product coordinates).

    The ``red=`` form colors the listed cells 2 and everything else 1.
    """
    n = g.n
    text = text.strip()
    if text.startswith("red="):
        if not isinstance(g, ProductGraph):
            raise InputError("red=(...) colorings need a product graph")
        cols = [1] * n
        cells = re.findall(r"\(([^)]*)\)", text[4:])
        if not cells:
            raise InputError(f"no coordinates in {text!r}")
        for cell in cells:
            try:
                coords = [int(x) - 1 for x in cell.split(",")]
            except ValueError:
                raise InputError(f"bad coordinate ({cell})") from None
            cols[g.index(coords)] = 2
        return cols
    try:
        cols = [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"bad coloring {text!r}") from None
    if len(cols) != n:
        raise InputError(f"coloring has {len(cols)} entries, graph has {n} vertices")
    return cols
