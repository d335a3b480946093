import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from clique_colorer import generators
from clique_colorer.cliques import clique_hypergraph
from clique_colorer.graph import from_edge_list

PROPERTY_SETTINGS = settings(
    max_examples=120,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def graphs(draw, min_n=0, max_n=7, connected=False):
    """
    Random simple graphs; with connected=True a random spanning tree is
    laid down before the extra edges
    """
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = set()
    if connected:
        for v in range(1, n):
            edges.add((draw(st.integers(min_value=0, max_value=v - 1)), v))
    if pairs:
        edges.update(draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))))
    return from_edge_list(n, edges)


def brute_force_chi_c(g, strong=False):
    """
    Smallest k admitting a clique-coloring, by trying every assignment.
    Only for graphs with at most eight vertices.
    """
    hyperedges = list(clique_hypergraph(g).hyperedges)
    if strong:
        hyperedges += [
            t
            for t in itertools.combinations(range(g.n), 3)
            if all(g.has_edge(a, b) for a, b in itertools.combinations(t, 2))
        ]
    for k in range(1, max(g.n, 1) + 1):
        for colors in itertools.product(range(1, k + 1), repeat=g.n):
            if all(len({colors[v] for v in edge}) > 1 for edge in hyperedges):
                return k
    return max(g.n, 1)


@pytest.fixture
def k5():
    return generators.complete_graph(5)


@pytest.fixture
def k33():
    return generators.complete_bipartite_graph(3, 3)


@pytest.fixture
def petersen():
    return generators.petersen_graph()


@pytest.fixture
def claw():
    return generators.star_graph(3)


@pytest.fixture
def c5():
    return generators.cycle_graph(5)


@pytest.fixture
def tmp_graph_file(tmp_path):
    """
    Writes a graph to a graph6 file and returns its path
    """
    from clique_colorer.graph6 import write_graph_file

    def write(g, name="graph.g6"):
        path = tmp_path / name
        write_graph_file(str(path), g)
        return str(path)

    return write
