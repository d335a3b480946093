import networkx as nx
import pytest
from hypothesis import given

from clique_colorer import generators
from clique_colorer.exceptions import ColoringError, GraphError
from clique_colorer.graph import (
    Coloring,
    Graph,
    complement,
    connected_components,
    contract_edge,
    cut_vertices_and_blocks,
    delete_vertices,
    from_edge_list,
    induced_subgraph,
    is_complete,
    line_graph,
    relabel,
)
from conftest import PROPERTY_SETTINGS, graphs


def test_from_edge_list_sorts_and_dedups():
    g = from_edge_list(4, [(2, 0), (0, 2), (3, 1), (0, 1)])
    assert g.adj == ((1, 2), (0, 3), (0,), (1,))
    assert g.edge_count == 3
    assert g.edges() == [(0, 1), (0, 2), (1, 3)]


@pytest.mark.parametrize(
    "n, edges",
    [(3, [(0, 0)]), (3, [(0, 3)]), (2, [(-1, 1)]), (-1, [])],
)
def test_from_edge_list_rejects_bad_input(n, edges):
    with pytest.raises(GraphError):
        from_edge_list(n, edges)


def test_graph_is_immutable_and_hashable():
    g = generators.cycle_graph(4)
    with pytest.raises(AttributeError):
        g.n = 5
    assert g == from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert len({g, generators.cycle_graph(4)}) == 1


def test_induced_subgraph_reports_members():
    g = generators.cycle_graph(5)
    sub, members = induced_subgraph(g, [4, 0, 1])
    assert members == (0, 1, 4)
    assert sub.edges() == [(0, 1), (0, 2)]


def test_induced_subgraph_rejects_duplicates():
    with pytest.raises(GraphError):
        induced_subgraph(generators.cycle_graph(5), [1, 1])


def test_delete_vertices():
    sub, members = delete_vertices(generators.complete_graph(5), [2])
    assert members == (0, 1, 3, 4)
    assert is_complete(sub) and sub.n == 4


def test_contract_edge_image_table():
    g = generators.path_graph(4)
    contracted, image = contract_edge(g, 1, 2)
    assert image == (0, 1, 1, 2)
    assert contracted.edges() == [(0, 1), (1, 2)]


def test_contract_non_edge_fails():
    with pytest.raises(GraphError):
        contract_edge(generators.path_graph(4), 0, 2)


def test_contracting_k33_edge_merges_neighborhoods():
    contracted, _ = contract_edge(generators.complete_bipartite_graph(3, 3), 0, 3)
    assert contracted.n == 5
    assert contracted.edge_count == 8
    assert contracted.neighbors(0) == (1, 2, 3, 4)


def test_relabel_requires_permutation():
    g = generators.path_graph(3)
    assert relabel(g, [2, 1, 0]).edges() == [(0, 1), (1, 2)]
    with pytest.raises(GraphError):
        relabel(g, [0, 0, 1])


def test_components_and_blocks():
    # two triangles sharing vertex 2, plus an isolated vertex 5
    g = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert connected_components(g) == [(0, 1, 2, 3, 4), (5,)]
    cuts, blocks = cut_vertices_and_blocks(g)
    assert cuts == [2]
    assert blocks == [(0, 1, 2), (2, 3, 4), (5,)]


@PROPERTY_SETTINGS
@given(graphs())
def test_blocks_match_networkx(g):
    cuts, blocks = cut_vertices_and_blocks(g)
    graph = g.to_networkx()
    assert cuts == sorted(nx.articulation_points(graph))
    expected = sorted(tuple(sorted(b)) for b in nx.biconnected_components(graph))
    expected += [(v,) for v in range(g.n) if g.degree(v) == 0]
    assert blocks == sorted(expected)


@PROPERTY_SETTINGS
@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).edge_count == g.n * (g.n - 1) // 2 - g.edge_count


@PROPERTY_SETTINGS
@given(graphs())
def test_line_graph_matches_networkx(g):
    lg, edges = line_graph(g)
    assert lg.n == len(edges) == g.edge_count
    expected = nx.line_graph(g.to_networkx())
    assert lg.edge_count == expected.number_of_edges()
    for i, j in lg.edges():
        assert set(edges[i]) & set(edges[j])


def test_networkx_round_trip():
    g = generators.petersen_graph()
    assert Graph.from_networkx(g.to_networkx()) == g


def test_coloring_validation_and_k():
    assert Coloring([1, 2, 2, 3]).k == 3
    assert Coloring([]).k == 1
    with pytest.raises(ColoringError):
        Coloring([1, 0])
    with pytest.raises(ColoringError):
        Coloring([1, True])
