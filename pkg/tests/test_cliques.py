import networkx as nx
from hypothesis import given

from clique_colorer import generators
from clique_colorer.cliques import (
    clique_hypergraph,
    independence_number,
    maximal_cliques,
    maximum_clique,
    triangles,
)
from clique_colorer.graph import complement, empty_graph, from_edge_list
from conftest import PROPERTY_SETTINGS, graphs


def test_maximal_cliques_of_small_graphs():
    assert maximal_cliques(empty_graph(0)) == []
    assert maximal_cliques(empty_graph(2)) == [(0,), (1,)]
    assert maximal_cliques(generators.complete_graph(5)) == [(0, 1, 2, 3, 4)]
    assert maximal_cliques(generators.cycle_graph(4)) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_hypergraph_drops_isolated_vertices():
    g = from_edge_list(3, [(0, 1)])
    hypergraph = clique_hypergraph(g)
    assert hypergraph.hyperedges == ((0, 1),)
    assert hypergraph.incidence() == [[0], [0], []]
    assert len(hypergraph) == 1


@PROPERTY_SETTINGS
@given(graphs(max_n=9))
def test_maximal_cliques_match_networkx(g):
    expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(g.to_networkx()))
    assert maximal_cliques(g) == expected


@PROPERTY_SETTINGS
@given(graphs(max_n=9))
def test_maximal_cliques_are_maximal_and_lexicographic(g):
    cliques = maximal_cliques(g)
    assert cliques == sorted(cliques)
    for clique in cliques:
        common = set(range(g.n)) - set(clique)
        for v in clique:
            common &= g.neighbor_set(v)
        assert not common


@PROPERTY_SETTINGS
@given(graphs(max_n=9))
def test_triangles_are_sorted_and_complete(g):
    found = triangles(g)
    expected = sum(nx.triangles(g.to_networkx()).values()) // 3
    assert len(found) == len(set(found)) == expected
    assert all(a < b < c for a, b, c in found)


@PROPERTY_SETTINGS
@given(graphs(max_n=9))
def test_independence_number_is_exact(g):
    alpha, witness = independence_number(g)
    assert len(witness) == alpha
    assert all(not g.has_edge(u, v) for u in witness for v in witness)
    clique_number = max(
        (len(c) for c in nx.find_cliques(complement(g).to_networkx())), default=0
    )
    assert alpha == clique_number


def test_known_values():
    assert independence_number(generators.petersen_graph())[0] == 4
    assert independence_number(generators.cycle_graph(5))[0] == 2
    hub_triangle = maximum_clique(generators.wheel_graph(4))
    assert len(hub_triangle) == 3 and 0 in hub_triangle
    assert independence_number(empty_graph(0)) == (0, ())
