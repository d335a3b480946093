import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clique_colorer import generators
from clique_colorer.exceptions import SizeLimitExceeded, WagnerError
from clique_colorer.fixtures import two_k5_sequence
from clique_colorer.graph import empty_graph, from_edge_list
from clique_colorer.recognizers import is_k33_minor_free
from clique_colorer.subdivisions import find_k33_subdivision
from clique_colorer.wagner import (
    K5_PIECE,
    GlueSpec,
    NotK33MinorFree,
    WagnerPiece,
    WagnerSequence,
    compose,
    decompose,
    random_sequence,
    validate,
)
from conftest import PROPERTY_SETTINGS, graphs


def _triangle():
    return WagnerPiece.planar(generators.complete_graph(3))


def _square():
    return WagnerPiece.planar(generators.cycle_graph(4))


def _two_k5_without_shared_edge():
    return WagnerSequence(
        (WagnerPiece.k5(), WagnerPiece.k5()),
        (GlueSpec.disjoint(), GlueSpec.edge((0, 1), (0, 1), keep_edge=False)),
    )


def test_two_k5_composition():
    g, remaps = compose(two_k5_sequence())
    assert g.n == 8
    assert g.edge_count == 19
    assert remaps == [(0, 1, 2, 3, 4), (0, 1, 5, 6, 7)]
    assert validate(two_k5_sequence()) == []


def test_edge_glue_can_drop_the_edge():
    g, _ = compose(_two_k5_without_shared_edge())
    assert g.edge_count == 18
    assert not g.has_edge(0, 1)


def test_one_vertex_and_disjoint_glues():
    seq = WagnerSequence(
        (_triangle(), _triangle(), _triangle()),
        (GlueSpec.disjoint(), GlueSpec.one_vertex(2, 0), GlueSpec.disjoint()),
    )
    g, remaps = compose(seq)
    assert g.n == 8
    assert remaps == [(0, 1, 2), (2, 3, 4), (5, 6, 7)]
    assert g.edges() == [
        (0, 1),
        (0, 2),
        (1, 2),
        (2, 3),
        (2, 4),
        (3, 4),
        (5, 6),
        (5, 7),
        (6, 7),
    ]


def test_nonadjacent_glue():
    seq = WagnerSequence(
        (_square(), _square()),
        (GlueSpec.disjoint(), GlueSpec.nonadjacent((0, 2), (0, 2))),
    )
    assert validate(seq) == []
    g, _ = compose(seq)
    assert g.n == 6
    assert not g.has_edge(0, 2)
    assert sorted(g.neighbors(0)) == [1, 3, 4, 5]


def test_labels_are_applied():
    seq = WagnerSequence((_triangle(),), (GlueSpec.disjoint(),), (2, 0, 1))
    g, remaps = compose(seq)
    assert remaps == [(2, 0, 1)]
    bad = WagnerSequence((_triangle(),), (GlueSpec.disjoint(),), (0, 0, 1))
    with pytest.raises(WagnerError):
        compose(bad)
    assert validate(bad)


@pytest.mark.parametrize(
    "seq, fragment",
    [
        (WagnerSequence((), ()), "empty"),
        (WagnerSequence((_triangle(),), ()), "glue specifications"),
        (WagnerSequence((_triangle(),), (GlueSpec.one_vertex(0, 0),)), "disjoint"),
        (
            WagnerSequence(
                (WagnerPiece.planar(generators.complete_graph(5)),),
                (GlueSpec.disjoint(),),
            ),
            "not planar",
        ),
        (
            WagnerSequence(
                (_triangle(), _triangle()),
                (GlueSpec.disjoint(), GlueSpec.one_vertex(3, 0)),
            ),
            "out of range",
        ),
        (
            WagnerSequence(
                (_square(), _square()),
                (GlueSpec.disjoint(), GlueSpec.edge((0, 2), (0, 1))),
            ),
            "not an edge",
        ),
        (
            WagnerSequence(
                (_triangle(), _triangle(), _square()),
                (
                    GlueSpec.disjoint(),
                    GlueSpec.disjoint(),
                    GlueSpec.nonadjacent((0, 3), (0, 2)),
                ),
            ),
            "earlier piece",
        ),
    ],
)
def test_validate_reports_problems(seq, fragment):
    errors = validate(seq)
    assert any(fragment in error for error in errors)


def test_json_round_trip():
    seq = random_sequence(7, 5)
    assert WagnerSequence.loads(seq.dumps()) == seq
    payload = json.loads(two_k5_sequence().dumps())
    assert payload["pieces"] == [{"kind": K5_PIECE}, {"kind": K5_PIECE}]
    assert payload["glues"][1] == {
        "mode": "edge",
        "anchors": {"host": [0, 1], "piece": [0, 1]},
        "keep_edge": True,
    }


@pytest.mark.parametrize(
    "text",
    ["not json", "{}", '{"pieces": [{"kind": "K7"}], "glues": [{"mode": "disjoint"}]}'],
)
def test_malformed_json(text):
    with pytest.raises(WagnerError):
        WagnerSequence.loads(text)


def test_random_sequence_is_reproducible():
    assert random_sequence(3, 6).dumps() == random_sequence(3, 6).dumps()
    with pytest.raises(WagnerError):
        random_sequence(1, 0)
    with pytest.raises(WagnerError):
        random_sequence(1, 2, (5, 3))


def test_random_sequence_honors_mode_weights():
    weights = {"k5": 0.0, "vertex": 0.0, "edge": 0.0, "nonadjacent": 0.0}
    seq = random_sequence(11, 4, (3, 5), mode_weights=weights)
    assert all(piece.kind == "planar" for piece in seq.pieces)
    assert all(glue.mode == "disjoint" for glue in seq.glues)


def test_decompose_k5(k5):
    seq = decompose(k5)
    assert [piece.kind for piece in seq.pieces] == [K5_PIECE]
    assert compose(seq)[0] == k5


def test_decompose_two_k5_without_shared_edge():
    g, _ = compose(_two_k5_without_shared_edge())
    seq = decompose(g)
    assert [piece.kind for piece in seq.pieces] == [K5_PIECE, K5_PIECE]
    assert seq.glues[1].mode == "edge" and not seq.glues[1].keep_edge
    assert compose(seq)[0] == g


def test_decompose_rejects_k33_and_petersen(k33, petersen):
    for g in (k33, petersen):
        result = decompose(g)
        assert isinstance(result, NotK33MinorFree)
        assert len(result.vertices) >= 6
        assert result.to_json()["vertices"] == list(result.vertices)


def test_decompose_edge_cases():
    assert compose(decompose(empty_graph(0)))[0] == empty_graph(0)
    assert compose(decompose(empty_graph(3)))[0] == empty_graph(3)
    with pytest.raises(SizeLimitExceeded):
        decompose(empty_graph(10), size_limit=5)


@PROPERTY_SETTINGS
@given(graphs(max_n=8))
def test_decompose_round_trip_or_k33(g):
    result = decompose(g)
    if isinstance(result, NotK33MinorFree):
        assert find_k33_subdivision(g) is not None
    else:
        assert validate(result) == []
        assert compose(result)[0] == g
        assert find_k33_subdivision(g) is None


@PROPERTY_SETTINGS
@given(
    st.integers(min_value=0, max_value=2**32 - 1), st.integers(min_value=1, max_value=4)
)
def test_random_sequences_decompose_back(seed, pieces):
    seq = random_sequence(seed, pieces, (3, 7))
    assert validate(seq) == []
    g, _ = compose(seq)
    again = decompose(g)
    assert isinstance(again, WagnerSequence)
    assert compose(again)[0] == g


def _k33_less_two_edges():
    # sides {0, 1, 2} and {3, 4, 5}, edges 03 and 14 removed
    edges = [
        (a, b)
        for a in (0, 1, 2)
        for b in (3, 4, 5)
        if (a, b) not in ((0, 3), (1, 4))
    ]
    return WagnerPiece.planar(from_edge_list(6, edges))


def test_nonadjacent_glues_share_one_piece():
    path = WagnerPiece.planar(generators.path_graph(3))
    one = WagnerSequence(
        (_k33_less_two_edges(), path),
        (GlueSpec.disjoint(), GlueSpec.nonadjacent((0, 3), (0, 2))),
    )
    assert validate(one) == []
    both = WagnerSequence(
        (_k33_less_two_edges(), path, path),
        (
            GlueSpec.disjoint(),
            GlueSpec.nonadjacent((0, 3), (0, 2)),
            GlueSpec.nonadjacent((1, 4), (0, 2)),
        ),
    )
    assert any("earlier piece" in error for error in validate(both))
    assert not is_k33_minor_free(compose(both)[0]).verdict


def test_same_pair_can_be_glued_twice():
    seq = WagnerSequence(
        (_square(), _square(), _square()),
        (
            GlueSpec.disjoint(),
            GlueSpec.nonadjacent((0, 2), (0, 2)),
            GlueSpec.nonadjacent((0, 2), (1, 3)),
        ),
    )
    assert validate(seq) == []
    assert is_k33_minor_free(compose(seq)[0]).verdict


@pytest.mark.slow
def test_thousand_random_sequences_are_k33_minor_free():
    for seed in range(1000):
        seq = random_sequence(seed, 6)
        assert validate(seq) == [], seed
        assert is_k33_minor_free(compose(seq)[0]).verdict, seed
