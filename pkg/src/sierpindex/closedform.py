"""Closed-form evaluation of degree-product indices on graph expansions.

Instead of building the level-``t`` expansion (``n**t`` vertices), the index
is assembled from exact per-edge and per-vertex degree-class counters of the
base graph. Counters and integer prefactors are carried in arbitrary
precision; floating point only enters when a counter multiplies a real power
of a degree, so ``t`` can be large without overflow in exact mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .construct import EdgeClassCounts, VertexClassCounts
from .graphs import (
    Graph,
    IndexParams,
    as_params,
    degree_power_sum,
    is_connected,
    randic_index,
    triangle_count,
    triangles_on_edge,
)

Number = Union[int, float]


def repunit(n: int, t: int) -> int:
    """``1 + n + n**2 + ... + n**(t-1)`` exactly; 0 for ``t = 0``.

    This is the length-``t`` base-``n`` repunit ``(n**t - 1) / (n - 1)``; it
    counts, per base edge, the copies of that edge in the level-``t``
    expansion.
    """
    if n < 2 or t < 0:
        raise ValueError("repunit needs n >= 2 and t >= 0")
    return (n ** t - 1) // (n - 1)


def _int_ratio(num: int, den: int) -> int:
    f = Fraction(num, den)
    assert f.denominator == 1, "prefactor expected to be integral"
    return int(f)


def _counters(n: int, dx: int, dy: int, tau: int, lead: int, rep: int) -> tuple[int, int, int, int]:
    """The four degree-class counters in (00, 01, 10, 11) increment order.

    ``lead`` multiplies the per-copy census of one level, ``rep`` the
    geometric carry-over from deeper levels; instantiated with
    ``(n**(t-2), repunit(n, t-2))`` this counts edge copies of the level-``t``
    expansion by endpoint degree increments.
    """
    c00 = lead * (n - dx - dy + tau)
    c01 = lead * (dy - tau) - rep * dx
    c10 = lead * (dx - tau) - rep * dy
    c11 = lead * (tau + 1) + rep * (dx + dy + 1)
    assert min(c00, c01, c10, c11) >= 0, "negative degree-class counter"
    return c00, c01, c10, c11


def edge_class_counts(base: Graph, x: int, y: int, t: int) -> EdgeClassCounts:
    """Exact copies of base edge ``{x, y}`` in the level-``t`` expansion,
    split by endpoint degree increments; equals the explicit census."""
    if t < 2:
        raise ValueError("degree-class counters need t >= 2")
    if x > y:
        x, y = y, x
    tau = triangles_on_edge(base, x, y)  # validates the edge
    deg = base.degrees()
    c = _counters(base.n, int(deg[x]), int(deg[y]), tau, base.n ** (t - 2), repunit(base.n, t - 2))
    return EdgeClassCounts(x, y, *c)


def vertex_class_counts(base: Graph, x: int, t: int) -> VertexClassCounts:
    """Exact copies of base vertex ``x`` in the level-``t`` expansion, split
    by kept degree (``c0``) vs degree + 1 (``c1``)."""
    if t < 2:
        raise ValueError("degree-class counters need t >= 2")
    if not 1 <= x <= base.n:
        raise ValueError(f"vertex {x} out of range")
    bumped = base.degree(x) * repunit(base.n, t - 1)
    return VertexClassCounts(x, base.n ** (t - 1) - bumped, bumped)


# -- term breakdowns and reports ----------------------------------------------

@dataclass(frozen=True)
class EdgeTerm:
    """One degree-class contribution: ``count * dx**alpha * dy**alpha``."""

    count: int
    degrees: tuple[int, int]
    value: Number


@dataclass(frozen=True)
class EdgeWeight:
    """Total contribution of all copies of one base edge."""

    x: int
    y: int
    terms: tuple[EdgeTerm, ...]
    weight: Number


@dataclass(frozen=True)
class SierpinskiBreakdown:
    """Per base edge: the four degree-class terms composing its weight."""

    edge_weights: tuple[EdgeWeight, ...]


class PolymericParts(NamedTuple):
    """The seven edge-group contributions of the polymeric expansion.

    In stacking order: the apex hub fan-out, the level-1 copy of the base,
    the hub fan-outs and expansion edges of middle levels ``2..t-1``, the
    parent links between consecutive levels, and the hub fan-outs and
    expansion edges of the top level ``t``.
    """

    hub_root: Number
    first_copy: Number
    hub_mid: Number
    copies_mid: Number
    level_links: Number
    hub_top: Number
    copies_top: Number

    @property
    def total(self) -> Number:
        if all(isinstance(p, int) for p in self):
            return sum(self)
        return math.fsum(self)

    def as_dict(self) -> dict[str, Number]:
        return dict(zip(self._fields, self))


@dataclass(frozen=True)
class PolymericBreakdown:
    """Seven-part split plus per-edge weights of the two expansion groups."""

    parts: PolymericParts
    copies_mid_edges: tuple[EdgeWeight, ...]
    copies_top_edges: tuple[EdgeWeight, ...]


@dataclass(frozen=True)
class IndexReport:
    """A computed index value with provenance and optional term breakdown.

    ``value`` is the float result (None when an exact integer result exceeds
    the double range); ``exact`` is set in exact mode only.
    """

    variant: str  # "S" (plain expansion) or "P" (polymeric)
    t: int
    alpha: float
    value: float | None
    exact: int | None
    breakdown: SierpinskiBreakdown | PolymericBreakdown | None
    source: str  # "closed-form" or "construction"

    def to_json_dict(self) -> dict:
        doc: dict = {
            "variant": self.variant,
            "t": self.t,
            "alpha": self.alpha,
            "value": self.value,
        }
        if self.breakdown is not None:
            doc["breakdown"] = _breakdown_json(self.breakdown)
        if self.exact is not None:
            doc["exact"] = str(self.exact)
        return doc


def _num_json(v: Number | None):
    # huge exact integers go to JSON as decimal strings
    return str(v) if isinstance(v, int) else v


def _edge_weights_json(weights: tuple[EdgeWeight, ...]) -> list[dict]:
    return [
        {
            "edge": [w.x, w.y],
            "terms": [
                {"count": str(term.count), "degrees": list(term.degrees), "value": _num_json(term.value)}
                for term in w.terms
            ],
            "weight": _num_json(w.weight),
        }
        for w in weights
    ]


def _breakdown_json(breakdown) -> dict:
    if isinstance(breakdown, SierpinskiBreakdown):
        return {"edge_weights": _edge_weights_json(breakdown.edge_weights)}
    return {
        "parts": {k: _num_json(v) for k, v in breakdown.parts.as_dict().items()},
        "copies_mid_edges": _edge_weights_json(breakdown.copies_mid_edges),
        "copies_top_edges": _edge_weights_json(breakdown.copies_top_edges),
    }


def _finish(variant: str, t: int, p: IndexParams, total: Number, breakdown) -> IndexReport:
    if p.exact:
        try:
            value = float(total)
        except OverflowError:
            value = None
        return IndexReport(variant, t, p.alpha, value, int(total), breakdown, "closed-form")
    return IndexReport(variant, t, p.alpha, float(total), None, breakdown, "closed-form")


# -- expansion index ----------------------------------------------------------

def _power(d: int, p: IndexParams) -> Number:
    return d ** p.int_alpha if p.exact else d ** p.alpha


def _edge_weight(x: int, y: int, dx: int, dy: int, counters, shift: int, p: IndexParams) -> EdgeWeight:
    """Weight of one base edge: four degree classes at ``base degree + shift``."""
    terms = []
    for (i, j), count in zip(((0, 0), (0, 1), (1, 0), (1, 1)), counters):
        a, b = dx + shift + i, dy + shift + j
        value = count * (_power(a, p) * _power(b, p))
        terms.append(EdgeTerm(count, (a, b), value))
    weight = sum(t.value for t in terms) if p.exact else math.fsum(t.value for t in terms)
    return EdgeWeight(x, y, tuple(terms), weight)


def sierpinski_randic(
    base: Graph,
    t: int,
    params: IndexParams | float,
    include_breakdown: bool = False,
) -> IndexReport:
    """Degree-product index of the level-``t`` expansion, in closed form.

    ``t = 1`` is the base graph itself and reduces to the direct edge sum;
    for ``t >= 2`` each base edge contributes its four degree-class terms.
    """
    p = as_params(params)
    if t < 1:
        raise ValueError("t must be >= 1")
    if t == 1:
        return _finish("S", t, p, randic_index(base, p), None)

    n = base.n
    lead, rep = n ** (t - 2), repunit(n, t - 2)
    deg = base.degrees().tolist()
    weights = []
    for x, y in base.iter_edges():
        tau = triangles_on_edge(base, x, y)
        counters = _counters(n, deg[x], deg[y], tau, lead, rep)
        weights.append(_edge_weight(x, y, deg[x], deg[y], counters, 0, p))
    total = sum(w.weight for w in weights) if p.exact else math.fsum(w.weight for w in weights)
    breakdown = SierpinskiBreakdown(tuple(weights)) if include_breakdown else None
    return _finish("S", t, p, total, breakdown)


# -- polymeric index ----------------------------------------------------------

def polymeric_level1_randic(base: Graph, params: IndexParams | float) -> Number:
    """Level-1 polymeric index: one hub of degree ``n`` joined to every base
    vertex, every base degree lifted by one."""
    p = as_params(params)
    if not is_connected(base):
        raise ValueError("polymeric index needs a connected base graph")
    deg = base.degrees().tolist()
    hub_terms = [_power(deg[x] + 1, p) for x in range(1, base.n + 1)]
    lift_terms = [_power(deg[x] + 1, p) * _power(deg[y] + 1, p) for x, y in base.iter_edges()]
    if p.exact:
        return base.n ** p.int_alpha * sum(hub_terms) + sum(lift_terms)
    return base.n ** p.alpha * math.fsum(hub_terms) + math.fsum(lift_terms)


def polymeric_randic(
    base: Graph,
    t: int,
    params: IndexParams | float,
    include_breakdown: bool = False,
) -> IndexReport:
    """Degree-product index of the level-``t`` polymeric expansion.

    ``t = 1`` reduces to :func:`polymeric_level1_randic`. For ``t >= 2`` the
    value splits into the seven :class:`PolymericParts` edge groups; all
    integer prefactors (powers, repunits, the telescoped level sums) are
    exact.
    """
    p = as_params(params)
    if t < 1:
        raise ValueError("t must be >= 1")
    if not is_connected(base):
        raise ValueError("polymeric index needs a connected base graph")
    if t == 1:
        return _finish("P", t, p, polymeric_level1_randic(base, p), None)

    n = base.n
    deg = base.degrees().tolist()
    psi1 = repunit(n, t - 1)
    psi2 = repunit(n, t - 2)
    lead = n ** (t - 2)
    # level sums of hub/repunit prefactors, telescoped to exact integers:
    #   mid hubs   sum_{i=2..t-1} repunit(i-1), mid copies sum_{i=2..t-1} repunit(i-2),
    #   parent links sum_{i=1..t-1} repunit(i-1)
    s_mid_hub = _int_ratio(t - 2 - n * psi2, 1 - n)
    s_mid_copy = _int_ratio(t - 2 - psi2, 1 - n)
    s_links = _int_ratio(t - 1 - psi1, 1 - n)

    verts = range(1, n + 1)
    hub_deg_pow = _power(n + 1, p)
    plus1 = {x: _power(deg[x] + 1, p) for x in verts}
    plus2 = {x: _power(deg[x] + 2, p) for x in verts}
    plus3 = {x: _power(deg[x] + 3, p) for x in verts}

    def vsum(values) -> Number:
        return sum(values) if p.exact else math.fsum(values)

    sum_p2 = vsum(plus2[x] for x in verts)
    sum_d_p2 = vsum(deg[x] * plus2[x] for x in verts)
    sum_d_p3 = vsum(deg[x] * plus3[x] for x in verts)

    hub_root = _power(n, p) * sum_p2
    first_copy = vsum(plus2[x] * plus2[y] for x, y in base.iter_edges())
    hub_mid = hub_deg_pow * ((n * psi2) * sum_p2 + s_mid_hub * (sum_d_p3 - sum_d_p2))
    level_links = hub_deg_pow * (psi1 * sum_p2 + s_links * (sum_d_p3 - sum_d_p2))
    hub_top = hub_deg_pow * (
        vsum(plus1[x] * (n ** (t - 1) - deg[x] * psi1) for x in verts) + psi1 * sum_d_p2
    )

    mid_edges = []
    top_edges = []
    for x, y in base.iter_edges():
        tau = triangles_on_edge(base, x, y)
        mid_edges.append(
            _edge_weight(x, y, deg[x], deg[y], _counters(n, deg[x], deg[y], tau, psi2, s_mid_copy), 2, p)
        )
        top_edges.append(
            _edge_weight(x, y, deg[x], deg[y], _counters(n, deg[x], deg[y], tau, lead, psi2), 1, p)
        )
    copies_mid = vsum(w.weight for w in mid_edges)
    copies_top = vsum(w.weight for w in top_edges)

    parts = PolymericParts(hub_root, first_copy, hub_mid, copies_mid, level_links, hub_top, copies_top)
    breakdown = (
        PolymericBreakdown(parts, tuple(mid_edges), tuple(top_edges)) if include_breakdown else None
    )
    return _finish("P", t, p, parts.total, breakdown)


# -- bounds for triangle-free bases --------------------------------------------

def sierpinski_randic_bounds(base: Graph, t: int, alpha: float) -> tuple[float, float]:
    """Sandwich ``lower <= index(expansion) <= upper`` for triangle-free bases.

    Built by replacing each degree increment ``(d+1)**alpha - d**alpha`` with
    its extreme over the degree range and each degree-class counter with its
    extreme; both bounds collapse to the exact value precisely when the base
    is regular. Requires minimum degree >= 1 and a degree spread small enough
    that the substituted factors stay nonnegative (checked).
    """
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if t < 2:
        raise ValueError("bounds need t >= 2")
    if triangle_count(base) != 0:
        raise ValueError("bounds require a triangle-free base graph")
    degs = base.degrees().tolist()[1:]
    dmin, dmax = min(degs), max(degs)
    if dmin < 1:
        raise ValueError("bounds require no isolated vertices")

    n = base.n
    lead, rep = n ** (t - 2), repunit(n, t - 2)
    r_base = randic_index(base, alpha)
    m_next = degree_power_sum(base, alpha + 1)
    m_edges = base.m  # = M1 / 2

    # Envelope of the per-vertex increment h(d) = (d+1)**a - d**a over
    # d in [dmin, dmax]; the two cross terms swap roles when alpha < 0.
    cross = ((dmin + 1) ** alpha - dmax ** alpha, (dmax + 1) ** alpha - dmin ** alpha)
    e_lo, e_hi = min(cross), max(cross)
    min_pow = min(dmin ** alpha, dmax ** alpha)
    if min_pow + e_lo < 0:
        raise ValueError("degree spread too large for a valid envelope at this alpha")

    def envelope(d_in: int, d_out: int, e: float) -> float:
        return (
            lead * (n - 2 * d_out) * r_base
            + (lead * d_in - d_out * rep) * (2 * r_base + e * m_next)
            + (lead + (2 * d_in + 1) * rep) * (r_base + e * m_next + m_edges * e * e)
        )

    return envelope(dmin, dmax, e_lo), envelope(dmax, dmin, e_hi)


def _bounds_envelope_variant(base: Graph, t: int, alpha: float) -> tuple[float, float]:
    """A circulating variant of the envelope formulas; kept for the formula
    audit in the test suite. Fails the collapse-to-equality property on
    regular bases (e.g. the 4-cycle at t=2), so it is not used."""
    n = base.n
    lead, rep = n ** (t - 2), repunit(n, t - 2)
    degs = base.degrees().tolist()[1:]
    dmin, dmax = min(degs), max(degs)
    r_base = randic_index(base, alpha)
    m_next = degree_power_sum(base, alpha + 1)
    m1 = 2 * base.m

    def printed(d_in: int, d_out: int, e: float) -> float:
        return (
            lead * (n - d_out) * r_base
            + 2 * (lead * d_in - d_out * rep) * (r_base + m_next * e)
            + (lead + (2 * d_in + 1) * rep) * (r_base + 2 * m_next * e)
            + (lead + (2 * d_in + 1) * rep) * (m1 / 2) * e * e
        )

    e_low = (dmin + 1) ** alpha - dmax ** alpha
    e_high = (dmax + 1) ** alpha - dmin ** alpha
    return printed(dmin, dmax, e_low), printed(dmax, dmin, e_high)
