import pytest

import networkx as nx

import sierpindex as sx
from sierpindex.construct import VertexBudgetError

from conftest import CORPUS_NAMES


def to_nx(g: sx.Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(1, g.n + 1))
    G.add_edges_from(g.iter_edges())
    return G


# -- word encoding ---------------------------------------------------------------

def test_word_codec_round_trip():
    for n, t in ((2, 4), (3, 3), (5, 2)):
        for vid in range(1, n ** t + 1):
            assert sx.word_to_id(sx.id_to_word(vid, n, t), n) == vid


def test_word_codec_rejects_bad_input():
    with pytest.raises(ValueError):
        sx.word_to_id((1, 4), 3)
    with pytest.raises(ValueError):
        sx.id_to_word(9, 2, 3)


def test_constant_words_sit_at_block_corners():
    # xx...x encodes to the id of the x-th copy's own corner
    assert sx.word_to_id((1, 1, 1), 3) == 1
    assert sx.word_to_id((3, 3, 3), 3) == 27


# -- plain expansion ---------------------------------------------------------------

def test_expansion_of_pair_is_a_path():
    k2 = sx.complete_graph(2)
    p4 = sx.sierpinski_graph(k2, 2)
    assert list(p4.iter_edges()) == [(1, 2), (2, 3), (3, 4)]
    for t in (3, 4, 5):
        g = sx.sierpinski_graph(k2, t)
        degs = sorted(g.degrees().tolist()[1:])
        assert g.n == 2 ** t
        assert degs == [1, 1] + [2] * (g.n - 2)
        assert sx.is_connected(g)


def test_level_one_is_the_base(corpus):
    for g in corpus.values():
        assert sx.sierpinski_graph(g, 1) == g


def test_triangle_expansion_counts():
    s = sx.sierpinski_graph(sx.complete_graph(3), 2)
    assert (s.n, s.m) == (9, 12)


@pytest.mark.parametrize("name", CORPUS_NAMES)
@pytest.mark.parametrize("t", [2, 3, 4])
def test_expansion_sizes(corpus, name, t):
    g = corpus[name]
    s = sx.sierpinski_graph(g, t)
    assert s.n == g.n ** t
    assert s.m == g.m * sx.repunit(g.n, t)


@pytest.mark.parametrize("name", ["K3", "P4", "K1_3", "demo7"])
@pytest.mark.parametrize("t", [2, 3])
def test_corner_and_connector_degrees(corpus, name, t):
    g = corpus[name]
    s = sx.sierpinski_graph(g, t)
    # constant words keep their base degree
    for x in range(1, g.n + 1):
        corner = sx.word_to_id((x,) * t, g.n)
        assert s.degree(corner) == g.degree(x)
    # the two endpoints joining copy x to copy y gain exactly one
    for x, y in g.iter_edges():
        u = sx.word_to_id((x,) + (y,) * (t - 1), g.n)
        v = sx.word_to_id((y,) + (x,) * (t - 1), g.n)
        assert s.has_edge(u, v)
        assert s.degree(u) == g.degree(y) + 1
        assert s.degree(v) == g.degree(x) + 1


def test_budget_refusal():
    with pytest.raises(VertexBudgetError) as exc:
        sx.sierpinski_graph(sx.complete_graph(3), 30, budget=10 ** 6)
    assert "vertex budget exceeded" in str(exc.value)
    assert exc.value.requested == 3 ** 30


def test_vertex_labels():
    labels = sx.vertex_labels(sx.complete_graph(3), 2)
    assert labels[0] == "11" and labels[-1] == "33" and len(labels) == 9


# -- censuses -----------------------------------------------------------------------

def test_edge_census_triangle():
    counts = sx.census_edge_classes(sx.complete_graph(3), 2)
    assert [c.as_tuple() for c in counts] == [(0, 1, 1, 2)] * 3


def test_edge_census_path3():
    by_edge = {(c.x, c.y): c.as_tuple() for c in sx.census_edge_classes(sx.path_graph(3), 2)}
    assert by_edge[(1, 2)] == (0, 2, 1, 1)
    assert by_edge[(2, 3)] == (0, 1, 2, 1)


def test_edge_census_totals_at_level_two(corpus):
    # each base edge has n in-copy copies plus one connector
    for g in corpus.values():
        for c in sx.census_edge_classes(g, 2):
            assert c.total == g.n + 1


def test_vertex_census_triangle():
    counts = sx.census_vertex_classes(sx.complete_graph(3), 2)
    assert [(c.c0, c.c1) for c in counts] == [(1, 2)] * 3


def test_vertex_census_pair_level_three():
    counts = sx.census_vertex_classes(sx.complete_graph(2), 3)
    assert [(c.c0, c.c1) for c in counts] == [(1, 3), (1, 3)]


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_vertex_census_totals(corpus, name):
    g = corpus[name]
    for t in (2, 3):
        for c in sx.census_vertex_classes(g, t):
            assert c.total == g.n ** (t - 1)


def test_census_requires_depth():
    with pytest.raises(ValueError):
        sx.census_edge_classes(sx.complete_graph(3), 1)
    with pytest.raises(ValueError):
        sx.census_vertex_classes(sx.complete_graph(3), 1)


# -- polymeric ------------------------------------------------------------------------

def test_polymeric_level_one_of_triangle_is_k4():
    g = sx.polymeric_graph(sx.complete_graph(3), 1)
    assert (g.n, g.m) == (4, 6)
    assert nx.is_isomorphic(to_nx(g), to_nx(sx.complete_graph(4)))


def test_polymeric_pair_level_two_matches_triangle_expansion():
    p = sx.polymeric_graph(sx.complete_graph(2), 2)
    s = sx.sierpinski_graph(sx.complete_graph(3), 2)
    assert (p.n, p.m) == (s.n, s.m) == (9, 12)
    assert nx.is_isomorphic(to_nx(p), to_nx(s))


def test_polymeric_triangle_level_two_matches_k4_expansion():
    p = sx.polymeric_graph(sx.complete_graph(3), 2)
    s = sx.sierpinski_graph(sx.complete_graph(4), 2)
    assert (p.n, p.m) == (s.n, s.m) == (16, 30)
    assert nx.is_isomorphic(to_nx(p), to_nx(s))


@pytest.mark.parametrize("name", CORPUS_NAMES)
@pytest.mark.parametrize("t", [1, 2, 3])
def test_polymeric_sizes(corpus, name, t):
    g = corpus[name]
    p = sx.polymeric_graph(g, t)
    n = g.n
    assert p.n == (n + 1) * sx.repunit(n, t)
    expected_m = sum(g.m * sx.repunit(n, i) + n ** i for i in range(1, t + 1))
    expected_m += sum(n ** i for i in range(1, t))
    assert p.m == expected_m


@pytest.mark.parametrize("name", ["K3", "P4", "K1_3"])
def test_polymeric_hub_degrees(corpus, name):
    g, t = corpus[name], 3
    p = sx.polymeric_graph(g, t)
    layout = sx.polymeric_layout(g.n, t)
    assert p.degree(layout.hub_id(1, 1)) == g.n  # apex: no parent link
    for i in range(2, t + 1):
        for j in layout.hub_ids(i):
            assert p.degree(j) == g.n + 1
    # word vertices: expansion degree, plus hub edge, plus parent link below top
    for i in range(1, t + 1):
        s = sx.sierpinski_graph(g, i)
        base = layout.level_offset(i) + g.n ** (i - 1)
        extra = 2 if i < t else 1
        for k in range(1, g.n ** i + 1):
            assert p.degree(base + k) == s.degree(k) + extra


def test_polymeric_rejects_disconnected_base():
    with pytest.raises(ValueError):
        sx.polymeric_graph(sx.Graph(4, [(1, 2), (3, 4)]), 2)


def test_polymeric_budget_refusal():
    with pytest.raises(VertexBudgetError):
        sx.polymeric_graph(sx.complete_graph(3), 20, budget=10 ** 5)


def test_polymeric_labels():
    labels = sx.polymeric_vertex_labels(sx.complete_graph(2), 2)
    assert labels[0] == "hub/1/1"
    assert labels[1] == "word/1/1"
    assert labels[-1] == "word/2/22"
    assert len(labels) == 9
