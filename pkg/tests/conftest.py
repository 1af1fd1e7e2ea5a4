import pytest

import sierpindex as sx


def build_corpus() -> dict:
    """The small graphs every cross-check runs over: complete, cycle, path,
    star and bipartite families plus the irregular 7-vertex demo graph."""
    return {
        "K2": sx.complete_graph(2),
        "K3": sx.complete_graph(3),
        "K4": sx.complete_graph(4),
        "K5": sx.complete_graph(5),
        "C4": sx.cycle_graph(4),
        "C5": sx.cycle_graph(5),
        "C6": sx.cycle_graph(6),
        "P3": sx.path_graph(3),
        "P4": sx.path_graph(4),
        "P5": sx.path_graph(5),
        "K1_3": sx.star_graph(3),
        "K2_3": sx.complete_bipartite_graph(2, 3),
        "demo7": sx.demo_graph(),
    }


CORPUS_NAMES = list(build_corpus())

#: corpus members with no triangles (the bounds only apply to these)
TRIANGLE_FREE = ["K2", "C4", "C5", "C6", "P3", "P4", "P5", "K1_3", "K2_3"]

ALPHAS = [-1.0, -0.5, 0.5, 1.0, 2.0]


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


def rel_close(a: float, b: float, tol: float = 1e-9) -> bool:
    return abs(a - b) <= max(tol * abs(b), 1e-12)
