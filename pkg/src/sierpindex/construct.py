"""Explicit expansion of self-similar graphs, plus degree-class censuses.

The level-``t`` expansion of a base graph on ``n`` vertices lives on all
words of length ``t`` over the base alphabet: one edge per base edge
``{x, y}``, prefix word ``w`` and level ``i``, joining ``w x y...y`` to
``w y x...x``. The polymeric variant stacks levels ``1..t`` of those
expansions and wires each level-``i`` copy of the base to a hub vertex.

Everything here builds the graphs outright, so it serves as the brute-force
ground truth for the closed forms; sizes are gated by a vertex budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import Graph, is_connected

#: Hard default cap on explicit construction size (vertices).
DEFAULT_VERTEX_BUDGET = 10_000_000


class VertexBudgetError(OverflowError):
    """Requested expansion exceeds the configured vertex budget."""

    def __init__(self, requested: int, budget: int):
        super().__init__(
            f"vertex budget exceeded: construction needs {requested} vertices"
            f" (budget {budget}); use the closed form instead"
        )
        self.requested = requested
        self.budget = budget


def _check_budget(requested: int, budget: int) -> None:
    if requested > budget:
        raise VertexBudgetError(requested, budget)


def _repunit(n: int, t: int) -> int:
    # 1 + n + ... + n**(t-1); local twin of closedform.repunit to avoid a cycle
    return (n ** t - 1) // (n - 1)


# -- word encoding -----------------------------------------------------------

def word_to_id(word: Sequence[int], n: int) -> int:
    """Pack a word (most significant letter first) into an id in ``1..n**t``."""
    vid = 0
    for letter in word:
        if not 1 <= letter <= n:
            raise ValueError(f"letter {letter} outside alphabet 1..{n}")
        vid = vid * n + (letter - 1)
    return vid + 1


def id_to_word(vid: int, n: int, t: int) -> tuple[int, ...]:
    """Inverse of :func:`word_to_id` for words of length ``t``."""
    if not 1 <= vid <= n ** t:
        raise ValueError(f"id {vid} outside 1..{n}**{t}")
    rem = vid - 1
    word = [0] * t
    for pos in range(t - 1, -1, -1):
        word[pos] = rem % n + 1
        rem //= n
    return tuple(word)


def _expansion_edge_block(base: Graph, t: int) -> np.ndarray:
    """0-based edge array of the level-``t`` expansion, one row per edge.

    Level ``i`` contributes, for every prefix ``p`` in ``0..n**(i-1)-1`` and
    base edge ``(x, y)``, the pair ``(p*n + x-1, p*n + y-1)`` extended by the
    constant tails ``y...y`` / ``x...x`` of length ``t - i``.
    """
    n = base.n
    out = np.empty((base.m * _repunit(n, t), 2), dtype=np.int64)
    row = 0
    for i in range(1, t + 1):
        tail = t - i
        shift = n ** tail
        rep = _repunit(n, tail) if tail else 0
        prefixes = np.arange(n ** (i - 1), dtype=np.int64) * n
        for x, y in base.iter_edges():
            u = (prefixes + (x - 1)) * shift + (y - 1) * rep
            v = (prefixes + (y - 1)) * shift + (x - 1) * rep
            out[row:row + prefixes.size, 0] = u
            out[row:row + prefixes.size, 1] = v
            row += prefixes.size
    assert row == out.shape[0]
    return out


def sierpinski_graph(base: Graph, t: int, budget: int = DEFAULT_VERTEX_BUDGET) -> Graph:
    """Build the level-``t`` expansion explicitly: ``n**t`` vertices.

    Level 1 is the base graph itself. Raises :class:`VertexBudgetError` when
    ``n**t`` exceeds ``budget``.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    total = base.n ** t
    _check_budget(total, budget)
    return Graph(total, _expansion_edge_block(base, t) + 1)


def vertex_labels(base: Graph, t: int) -> list[str]:
    """Word label per expansion vertex id (dot-joined when letters exceed 9)."""
    sep = "" if base.n <= 9 else "."
    return [
        sep.join(map(str, id_to_word(vid, base.n, t)))
        for vid in range(1, base.n ** t + 1)
    ]


# -- polymeric layout and construction ---------------------------------------

@dataclass(frozen=True)
class PolymericLayout:
    """Vertex numbering of the layered polymeric expansion.

    Level ``i`` (1-based) occupies one contiguous id block: first its
    ``n**(i-1)`` hub vertices, then the ``n**i`` word vertices of the
    level-``i`` expansion. Total order size is ``(n+1) * (1 + n + ... +
    n**(t-1))``.
    """

    n: int
    t: int

    def level_offset(self, i: int) -> int:
        return (self.n + 1) * _repunit(self.n, i - 1)

    def hub_id(self, i: int, j: int) -> int:
        """Hub ``j`` (1-based, ``j <= n**(i-1)``) of level ``i``."""
        return self.level_offset(i) + j

    def word_vertex_id(self, i: int, k: int) -> int:
        """Word vertex ``k`` (1-based word index, ``k <= n**i``) of level ``i``."""
        return self.level_offset(i) + self.n ** (i - 1) + k

    def hub_ids(self, i: int) -> range:
        start = self.level_offset(i)
        return range(start + 1, start + self.n ** (i - 1) + 1)

    def word_vertex_ids(self, i: int) -> range:
        start = self.level_offset(i) + self.n ** (i - 1)
        return range(start + 1, start + self.n ** i + 1)

    @property
    def total_vertices(self) -> int:
        return (self.n + 1) * _repunit(self.n, self.t)


def polymeric_layout(n: int, t: int) -> PolymericLayout:
    if n < 2 or t < 1:
        raise ValueError("need n >= 2 and t >= 1")
    return PolymericLayout(n, t)


def polymeric_graph(base: Graph, t: int, budget: int = DEFAULT_VERTEX_BUDGET) -> Graph:
    """Build the level-``t`` polymeric expansion of a connected base.

    Three edge groups per level ``i``: the level-``i`` expansion edges, the
    hub fan-outs (hub ``j`` joined to every vertex of the ``j``-th base copy,
    i.e. word vertices ``(j-1)*n+1 .. j*n``), and for ``i < t`` the parent
    links (word vertex ``j`` of level ``i`` to hub ``j`` of level ``i+1``).
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if not is_connected(base):
        raise ValueError("polymeric expansion needs a connected base graph")
    layout = polymeric_layout(base.n, t)
    _check_budget(layout.total_vertices, budget)

    n = base.n
    blocks: list[np.ndarray] = []
    for i in range(1, t + 1):
        word_base = layout.level_offset(i) + n ** (i - 1)  # ids are word_base + k
        level_edges = _expansion_edge_block(base, i) + (word_base + 1)
        k = np.arange(1, n ** i + 1, dtype=np.int64)
        fan = np.column_stack((layout.level_offset(i) + (k - 1) // n + 1, word_base + k))
        blocks.extend((level_edges, fan))
        if i < t:
            links = np.column_stack((word_base + k, layout.level_offset(i + 1) + k))
            blocks.append(links)
    return Graph(layout.total_vertices, np.concatenate(blocks))


def polymeric_vertex_labels(base: Graph, t: int) -> list[str]:
    """Readable label per polymeric vertex id: ``hub/<level>/<j>`` or
    ``word/<level>/<word>``."""
    layout = polymeric_layout(base.n, t)
    sep = "" if base.n <= 9 else "."
    labels = []
    for i in range(1, t + 1):
        labels.extend(f"hub/{i}/{j}" for j in range(1, base.n ** (i - 1) + 1))
        labels.extend(
            f"word/{i}/{sep.join(map(str, id_to_word(k, base.n, i)))}"
            for k in range(1, base.n ** i + 1)
        )
    assert len(labels) == layout.total_vertices
    return labels


# -- censuses ----------------------------------------------------------------

@dataclass(frozen=True)
class EdgeClassCounts:
    """Copies of one base edge classified by endpoint degree increments.

    ``cIJ`` counts copies whose endpoint over ``x`` has degree ``deg(x) + I``
    and whose endpoint over ``y`` has degree ``deg(y) + J`` (``x < y``).
    """

    x: int
    y: int
    c00: int
    c01: int
    c10: int
    c11: int

    @property
    def total(self) -> int:
        return self.c00 + self.c01 + self.c10 + self.c11

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.c00, self.c01, self.c10, self.c11)


@dataclass(frozen=True)
class VertexClassCounts:
    """Copies of one base vertex split by degree: kept (``c0``) vs +1 (``c1``)."""

    x: int
    c0: int
    c1: int

    @property
    def total(self) -> int:
        return self.c0 + self.c1


def _decode_edge_origin(g: Graph, n: int, t: int) -> tuple[np.ndarray, np.ndarray]:
    """Per expansion edge: the base letters ``(x, y)`` whose copies the two
    endpoints are.

    An expansion edge always reads ``w a b...b`` / ``w b a...a`` for a base
    edge ``{a, b}``; each endpoint is a copy of its own last letter (the tail
    letter, or the differing letter itself when the edge sits at the last
    position). Decoding checks the constant-tail structure.
    """
    u = g.edges[:, 0] - 1
    v = g.edges[:, 1] - 1
    du = np.empty((g.m, t), dtype=np.int64)
    dv = np.empty((g.m, t), dtype=np.int64)
    ru, rv = u.copy(), v.copy()
    for pos in range(t - 1, -1, -1):
        du[:, pos] = ru % n
        dv[:, pos] = rv % n
        ru //= n
        rv //= n
    diff = du != dv
    first = diff.argmax(axis=1)
    assert diff.any(axis=1).all(), "self-copy edge found"
    cols = np.arange(t)
    a = du[np.arange(g.m), first]
    b = dv[np.arange(g.m), first]
    after = cols[None, :] > first[:, None]
    assert (np.where(after, du, b[:, None]) == b[:, None]).all(), "tail of first endpoint is not constant"
    assert (np.where(after, dv, a[:, None]) == a[:, None]).all(), "tail of second endpoint is not constant"
    return du[:, -1] + 1, dv[:, -1] + 1


def census_edge_classes(
    base: Graph, t: int, budget: int = DEFAULT_VERTEX_BUDGET
) -> list[EdgeClassCounts]:
    """Empirical degree-class counts per base edge, from the built expansion.

    Requires ``t >= 2``. Every expansion endpoint must sit at its base degree
    or one above it; anything else is an internal invariant failure.
    """
    if t < 2:
        raise ValueError("census needs t >= 2")
    g = sierpinski_graph(base, t, budget)
    x, y = _decode_edge_origin(g, base.n, t)
    for u, v in np.unique(np.sort(np.column_stack((x, y)), axis=1), axis=0).tolist():
        assert base.has_edge(u, v), f"decoded pair {{{u},{v}}} is not a base edge"
    deg = g.degrees()
    base_deg = base.degrees()
    inc_x = deg[g.edges[:, 0]] - base_deg[x]
    inc_y = deg[g.edges[:, 1]] - base_deg[y]
    assert ((inc_x == 0) | (inc_x == 1)).all(), "endpoint degree outside {d, d+1}"
    assert ((inc_y == 0) | (inc_y == 1)).all(), "endpoint degree outside {d, d+1}"

    # orient increments along the canonical (min, max) base edge
    swap = x > y
    bx = np.where(swap, y, x)
    by = np.where(swap, x, y)
    bi = np.where(swap, inc_y, inc_x)
    bj = np.where(swap, inc_x, inc_y)

    code = ((bx * (base.n + 1) + by) << 2) | (bi << 1).astype(np.int64) | bj
    counts = np.bincount(code, minlength=(base.n + 1) ** 2 << 2)
    out = []
    for u, v in base.iter_edges():
        slot = (u * (base.n + 1) + v) << 2
        c = counts[slot:slot + 4]
        out.append(EdgeClassCounts(u, v, int(c[0]), int(c[1]), int(c[2]), int(c[3])))
    assert sum(e.total for e in out) == g.m
    return out


def census_vertex_classes(
    base: Graph, t: int, budget: int = DEFAULT_VERTEX_BUDGET
) -> list[VertexClassCounts]:
    """Empirical degree-class counts per base vertex over its ``n**(t-1)``
    copies in the built expansion (copies share the final letter)."""
    if t < 2:
        raise ValueError("census needs t >= 2")
    g = sierpinski_graph(base, t, budget)
    last = (np.arange(g.n, dtype=np.int64)) % base.n + 1
    inc = g.degrees()[1:] - base.degrees()[last]
    assert ((inc == 0) | (inc == 1)).all(), "copy degree outside {d, d+1}"
    counts = np.bincount(last * 2 + inc, minlength=(base.n + 1) * 2)
    return [
        VertexClassCounts(x, int(counts[2 * x]), int(counts[2 * x + 1]))
        for x in range(1, base.n + 1)
    ]
