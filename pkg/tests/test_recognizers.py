import networkx as nx
import pytest
from hypothesis import given

from clique_colorer import generators
from clique_colorer.fixtures import beineke_graphs
from clique_colorer.graph6 import encode_graph6
from clique_colorer.graph import Graph, complement, empty_graph, from_edge_list, line_graph
from clique_colorer.recognizers import (
    RECOGNIZERS,
    RecognitionReport,
    find_induced_copy,
    find_singular_vertex,
    find_twins,
    is_antiprismatic,
    is_claw_free,
    is_k33_minor_free,
    is_line_graph,
    is_odd_cycle,
    is_planar,
    is_prismatic,
    is_triangle_free,
    k33_subdivision_report,
    planarity_embedding,
    recognize,
    recognize_all,
    verify_witness,
)
from clique_colorer.subdivisions import K5, K33
from conftest import PROPERTY_SETTINGS, graphs


def test_claw_witness(claw):
    report = is_claw_free(claw)
    assert not report.verdict
    assert report.witness == {"center": 0, "leaves": [1, 2, 3]}
    assert verify_witness(claw, report)
    assert is_claw_free(generators.complete_graph(5)).verdict


def test_triangle_witness(k5, petersen):
    report = is_triangle_free(k5)
    assert report.witness == {"triangle": [0, 1, 2]}
    assert is_triangle_free(petersen).verdict


@pytest.mark.parametrize(
    "g, expected",
    [
        (generators.cycle_graph(3), True),
        (generators.cycle_graph(5), True),
        (generators.cycle_graph(6), False),
        (generators.path_graph(5), False),
        (
            from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]),
            False,
        ),
        (empty_graph(1), False),
    ],
)
def test_odd_cycle(g, expected):
    assert is_odd_cycle(g).verdict is expected


def test_planar_witnesses(k5, k33, petersen):
    report = is_planar(generators.icosahedron())
    assert report.verdict
    assert verify_witness(generators.icosahedron(), report)
    k5_report = is_planar(k5)
    assert not k5_report.verdict
    assert k5_report.witness["kind"] == K5
    assert verify_witness(k5, k5_report)
    k33_report = is_planar(k33)
    assert k33_report.witness["kind"] == K33
    assert verify_witness(k33, k33_report)
    assert verify_witness(petersen, is_planar(petersen))


def test_tampered_rotation_is_rejected():
    g = generators.complete_graph(4)
    rotation = [list(r) for r in is_planar(g).witness["rotation"]]
    flipped = [list(r) for r in rotation]
    flipped[0] = flipped[0][::-1]
    assert not verify_witness(g, RecognitionReport("planar", True, {"rotation": flipped}))
    rotation[1] = rotation[1][:-1]
    assert not verify_witness(g, RecognitionReport("planar", True, {"rotation": rotation}))


def test_planarity_embedding(k5):
    assert planarity_embedding(k5) is None
    embedding = planarity_embedding(generators.wheel_graph(5))
    assert sorted(embedding[0]) == [1, 2, 3, 4, 5]


@PROPERTY_SETTINGS
@given(graphs(max_n=9))
def test_planarity_verdict_and_witness(g):
    report = is_planar(g)
    assert report.verdict == nx.check_planarity(g.to_networkx())[0]
    assert verify_witness(g, report)


def test_k33_minor_free_verdicts(k5, k33, petersen):
    assert is_k33_minor_free(k5).verdict
    assert is_k33_minor_free(generators.icosahedron()).verdict
    for g in (k33, petersen):
        report = is_k33_minor_free(g)
        assert not report.verdict
        assert verify_witness(g, report)


@PROPERTY_SETTINGS
@given(graphs(max_n=8))
def test_k33_minor_matches_subdivision_search(g):
    minor_free = is_k33_minor_free(g).verdict
    subdivision = k33_subdivision_report(g)
    assert minor_free != subdivision.verdict
    assert verify_witness(g, subdivision)


def test_beineke_graphs_are_their_own_witness():
    for name, pattern in beineke_graphs():
        report = is_line_graph(pattern)
        assert not report.verdict
        assert report.witness["forbidden"] == name
        assert verify_witness(pattern, report)


def test_beineke_graphs_are_not_isomorphic():
    patterns = [pattern.to_networkx() for _, pattern in beineke_graphs()]
    for i, a in enumerate(patterns):
        for b in patterns[i + 1 :]:
            assert not nx.is_isomorphic(a, b)


@PROPERTY_SETTINGS
@given(graphs(max_n=5))
def test_line_graphs_are_recognized(root):
    lg, _ = line_graph(root)
    assert is_line_graph(lg).verdict
    assert is_claw_free(lg).verdict


@PROPERTY_SETTINGS
@given(graphs(max_n=7))
def test_non_line_graphs_carry_a_forbidden_copy(g):
    report = is_line_graph(g)
    assert verify_witness(g, report)
    if not report.verdict:
        assert report.witness["forbidden"].startswith("beineke-")


def test_find_induced_copy():
    c5 = generators.cycle_graph(5)
    assert find_induced_copy(generators.petersen_graph(), c5) is not None
    assert find_induced_copy(generators.complete_graph(5), generators.path_graph(3)) is None
    assert find_induced_copy(c5, generators.complete_graph(6)) is None
    image = find_induced_copy(generators.wheel_graph(5), generators.star_graph(3))
    assert image is None


def test_prismatic_and_antiprismatic():
    prism = generators.prism_graph()
    assert is_prismatic(prism).verdict
    assert is_antiprismatic(complement(prism)).verdict
    report = is_prismatic(generators.complete_graph(4))
    assert not report.verdict
    assert report.witness["neighbors_in_triangle"] == 3
    assert verify_witness(generators.complete_graph(4), report)
    anti = is_antiprismatic(empty_graph(4))
    assert not anti.verdict
    assert verify_witness(empty_graph(4), anti)


def test_singular_vertex_and_twins():
    g = from_edge_list(6, [(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (1, 2)])
    report = find_singular_vertex(g)
    assert report.witness == {"vertex": 0}
    assert not find_singular_vertex(generators.cycle_graph(6)).verdict
    twins = find_twins(generators.complete_graph(3))
    assert twins.witness == {"pair": [0, 1]}
    assert not find_twins(generators.cycle_graph(5)).verdict


def test_recognize_dispatch(k5):
    assert recognize(k5, "planar").predicate == "planar"
    with pytest.raises(ValueError):
        recognize(k5, "bipartite")
    reports = recognize_all(k5)
    assert [r.predicate for r in reports] == list(RECOGNIZERS)
    assert all(verify_witness(k5, r) for r in reports)


def test_report_json():
    report = is_claw_free(Graph(0, []))
    assert report.to_json() == {"predicate": "claw-free", "verdict": True, "witness": None}


def test_k33_minor_free_positive_witness_composes_back(k5):
    for g in (k5, generators.icosahedron(), generators.cycle_graph(8)):
        report = is_k33_minor_free(g)
        assert report.witness["pieces"] == len(report.witness["sequence"]["pieces"])
        assert verify_witness(g, report)
    report = is_k33_minor_free(k5)
    assert not verify_witness(generators.complete_graph(4), report)


def test_k33_piece_with_virtual_edge(k33):
    edges = [e for e in k33.edges() if e != (0, 3)] + [(0, 6), (3, 6)]
    g = from_edge_list(7, edges)
    report = is_k33_minor_free(g)
    assert not report.verdict
    assert report.witness["vertices"] == [0, 1, 2, 3, 4, 5]
    assert report.witness["virtual_edges"] == [[0, 3]]
    assert verify_witness(g, report)


def test_forged_k33_witnesses_are_rejected(k33):
    c8 = generators.cycle_graph(8)
    forged = {"vertices": [0, 1, 2, 3, 4, 5], "graph6": "E?", "virtual_edges": []}
    assert not verify_witness(c8, RecognitionReport("k33-minor-free", False, forged))

    # an extra virtual edge with nothing behind it
    plus = from_edge_list(6, k33.edges() + [(0, 1)])
    unbacked = {
        "vertices": [0, 1, 2, 3, 4, 5],
        "graph6": encode_graph6(plus),
        "virtual_edges": [[0, 1]],
    }
    assert not verify_witness(k33, RecognitionReport("k33-minor-free", False, unbacked))

    report = is_k33_minor_free(k33)
    assert not verify_witness(
        c8, RecognitionReport("k33-minor-free", True, {"pieces": 1})
    )
    assert not verify_witness(
        generators.complete_graph(6), RecognitionReport("k33-minor-free", False, report.witness)
    )


@PROPERTY_SETTINGS
@given(graphs(max_n=8))
def test_k33_minor_free_witness_verifies(g):
    assert verify_witness(g, is_k33_minor_free(g))
