"""Immutable simple graphs with a canonical edge order, plus degree-based indices.

Vertices are dense integer ids ``1..n``. Adjacency lives in CSR form (one flat
sorted neighbor array plus offsets) and the edge list is stored
lexicographically sorted with ``u < v``, so every sum over edges has a single
reproducible order. Graphs are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid graph data: bad vertex ids, self-loops, duplicate edges, ..."""


class ParseError(GraphError):
    """Malformed edge-list document; carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class Graph:
    """Simple undirected graph on vertices ``1..n`` with at least one edge.

    ``edges`` is an ``(m, 2)`` int64 array sorted lexicographically with
    ``u < v`` in every row; this is the canonical iteration order used by all
    index computations. Neighbor arrays are sorted ascending.
    """

    __slots__ = ("n", "m", "_edges", "_indptr", "_indices")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] | np.ndarray):
        if n < 2:
            raise GraphError(f"need at least 2 vertices, got n={n}")
        e = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64)
        if e.ndim != 2 or e.shape[1] != 2 or e.shape[0] == 0:
            raise GraphError("need a nonempty sequence of vertex pairs")
        if e.min() < 1 or e.max() > n:
            raise GraphError(f"vertex id out of range 1..{n}")
        if (e[:, 0] == e[:, 1]).any():
            raise GraphError("self-loops are not allowed")

        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        key = np.unique(lo * np.int64(n + 1) + hi)
        if key.size != lo.size:
            raise GraphError("duplicate edges are not allowed")
        # unique() sorts by key, which is exactly lexicographic (lo, hi) order
        canon = np.column_stack((key // (n + 1), key % (n + 1)))

        src = np.concatenate((canon[:, 0], canon[:, 1]))
        dst = np.concatenate((canon[:, 1], canon[:, 0]))
        order = np.lexsort((dst, src))
        indices = np.ascontiguousarray(dst[order])
        counts = np.bincount(src, minlength=n + 1)
        indptr = np.zeros(n + 2, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])

        for arr in (canon, indices, indptr):
            arr.flags.writeable = False
        self.n = int(n)
        self.m = int(canon.shape[0])
        self._edges = canon
        self._indptr = indptr
        self._indices = indices

    @property
    def edges(self) -> np.ndarray:
        """Read-only ``(m, 2)`` array in canonical order."""
        return self._edges

    def iter_edges(self) -> Iterator[tuple[int, int]]:
        """Canonical edges as plain Python int pairs."""
        return (tuple(edge) for edge in self._edges.tolist())

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of ``v`` (read-only view)."""
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def degrees(self) -> np.ndarray:
        """Degree table indexed by vertex id (entry 0 is unused and zero)."""
        return np.diff(self._indptr)

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return i < nb.size and nb[i] == v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._edges, other._edges)

    __hash__ = None  # mutable-free but identity hashing would mislead

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format into a canonical :class:`Graph`.

    Format: optional comment lines starting ``#``, one header line
    ``p <n> <m>``, then exactly ``m`` lines ``<u> <v>`` with 1-based ids,
    ``u != v``, whitespace separated. Errors report the offending line.
    """
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "p":
                raise ParseError("expected header 'p <n> <m>'", line_no)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("header counts must be integers", line_no) from None
            if n < 2:
                raise ParseError("need at least 2 vertices", line_no)
            if m < 1:
                raise ParseError("need at least 1 edge", line_no)
            continue
        if len(edges) == m:
            raise ParseError(f"edge count mismatch: header says m={m}", line_no)
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected an edge line '<u> <v>'", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("vertex ids must be integers", line_no) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex id out of range 1..{n}", line_no)
        if u == v:
            raise ParseError("self-loop", line_no)
        edge = (u, v) if u < v else (v, u)
        if edge in seen:
            raise ParseError(f"duplicate edge {{{edge[0]},{edge[1]}}}", line_no)
        seen.add(edge)
        edges.append(edge)
    if n is None:
        raise ParseError("missing header 'p <n> <m>'")
    if len(edges) != m:
        raise ParseError(f"edge count mismatch: header says m={m}, found {len(edges)}")
    return Graph(n, edges)


def render_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list`; canonical order, LF newlines."""
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.iter_edges())
    return "\n".join(lines) + "\n"


# -- named families ----------------------------------------------------------

#: Fixed edge list of the 7-vertex demo graph: a 4-cycle sharing an edge with
#: a triangle, plus a 2-edge tail. Degrees span 1..3 and it has one triangle,
#: which makes it a convenient irregular test base.
DEMO_EDGES = ((1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6), (6, 7))


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    return Graph(n, [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def path_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("path needs n >= 2")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def star_graph(r: int) -> Graph:
    """Star with center 1 and ``r`` leaves."""
    if r < 1:
        raise ValueError("star needs r >= 1 leaves")
    return Graph(r + 1, [(1, leaf) for leaf in range(2, r + 2)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """Parts ``1..a`` and ``a+1..a+b``."""
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs a, b >= 1")
    return Graph(a + b, [(u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)])


def demo_graph() -> Graph:
    return Graph(7, DEMO_EDGES)


_FAMILIES = {
    "complete": (complete_graph, 1),
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "star": (star_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
    "demo": (demo_graph, 0),
}


def generate_family(family: str, params: Sequence[int] = ()) -> Graph:
    """Build a named family member; see ``_FAMILIES`` for accepted names."""
    try:
        builder, arity = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}") from None
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


# -- triangles ---------------------------------------------------------------

def triangles_on_edge(g: Graph, u: int, v: int) -> int:
    """Number of triangles through the edge ``{u, v}`` (= common neighbors)."""
    if not g.has_edge(u, v):
        raise ValueError(f"{{{u},{v}}} is not an edge")
    return int(np.intersect1d(g.neighbors(u), g.neighbors(v), assume_unique=True).size)


def triangle_count(g: Graph) -> int:
    """Total number of triangles; each is met once per incident edge."""
    total = sum(triangles_on_edge(g, u, v) for u, v in g.iter_edges())
    assert total % 3 == 0, "edge-wise triangle sum must be divisible by 3"
    return total // 3


def is_connected(g: Graph) -> bool:
    seen = np.zeros(g.n + 1, dtype=bool)
    seen[1] = True
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v).tolist():
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return bool(seen[1:].all())


# -- degree-product indices --------------------------------------------------

@dataclass(frozen=True)
class IndexParams:
    """Exponent and arithmetic mode for degree-product indices.

    ``alpha`` must be nonzero (edge counting is just ``m``). Exact mode keeps
    every term an arbitrary-precision integer and requires an integer
    ``alpha >= 1``; it exists because the ``alpha = 1`` index of large
    expansions overflows 64-bit and double ranges.
    """

    alpha: float
    exact: bool = False

    def __post_init__(self):
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")
        if self.exact and not (float(self.alpha).is_integer() and self.alpha >= 1):
            raise ValueError("exact mode requires an integer alpha >= 1")

    @property
    def int_alpha(self) -> int:
        return int(self.alpha)


def as_params(params: IndexParams | float) -> IndexParams:
    """Accept a bare exponent anywhere an :class:`IndexParams` is expected."""
    return params if isinstance(params, IndexParams) else IndexParams(float(params))


def randic_index(g: Graph, params: IndexParams | float) -> float | int:
    """Sum over edges of ``(deg(u) * deg(v)) ** alpha`` in canonical order."""
    p = as_params(params)
    deg = g.degrees().tolist()
    if p.exact:
        a = p.int_alpha
        return sum((deg[u] * deg[v]) ** a for u, v in g.iter_edges())
    return math.fsum((deg[u] * deg[v]) ** p.alpha for u, v in g.iter_edges())


def degree_power_sum(g: Graph, alpha: float) -> float:
    """Sum over vertices of ``deg(v) ** alpha``.

    ``alpha = 1`` gives twice the edge count; ``alpha = 2`` the classic
    squared-degree sum.
    """
    deg = g.degrees().tolist()[1:]
    if alpha <= 0 and min(deg) == 0:
        raise ValueError("graph has an isolated vertex; alpha <= 0 is undefined")
    return math.fsum(d ** alpha for d in deg)


# -- degree profile ----------------------------------------------------------

@dataclass(frozen=True)
class DegreeProfile:
    """What the degree sequence allows: regularity, triangle freeness, and
    bipartite semiregularity ``(n1, n2, d1, d2)`` when it applies (part 1 is
    the side containing vertex 1)."""

    min_degree: int
    max_degree: int
    is_regular: bool
    regular_degree: int | None
    is_triangle_free: bool
    bipartite_semiregular: tuple[int, int, int, int] | None


def _two_coloring(g: Graph) -> np.ndarray | None:
    """Per-vertex colors 0/1 if bipartite, else None."""
    color = np.full(g.n + 1, -1, dtype=np.int8)
    for root in range(1, g.n + 1):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v).tolist():
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def degree_profile(g: Graph) -> DegreeProfile:
    deg = g.degrees()[1:]
    dmin, dmax = int(deg.min()), int(deg.max())
    regular = dmin == dmax
    semi = None
    color = _two_coloring(g)
    if color is not None:
        part1 = np.flatnonzero(color[1:] == color[1]) + 1
        part2 = np.flatnonzero(color[1:] != color[1]) + 1
        d1 = deg[part1 - 1]
        d2 = deg[part2 - 1]
        if part2.size and d1.min() == d1.max() and d2.min() == d2.max():
            semi = (int(part1.size), int(part2.size), int(d1[0]), int(d2[0]))
    return DegreeProfile(
        min_degree=dmin,
        max_degree=dmax,
        is_regular=regular,
        regular_degree=dmin if regular else None,
        is_triangle_free=triangle_count(g) == 0,
        bipartite_semiregular=semi,
    )
