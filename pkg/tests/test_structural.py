import pytest
from hypothesis import given
from hypothesis import strategies as st

from clique_colorer import generators
from clique_colorer.cliques import independence_number
from clique_colorer.exceptions import (
    OddCycleException,
    PreconditionError,
    WagnerError,
)
from clique_colorer.fixtures import FIXTURES, singular_demo, singular_host, two_k5_sequence
from clique_colorer.graph import Coloring, disjoint_union, from_edge_list, line_graph
from clique_colorer.recognizers import find_singular_vertex, is_k33_minor_free
from clique_colorer.solver import verify_clique_coloring, verify_strong
from clique_colorer.structural import (
    K5_BASE,
    ColoringTrace,
    TraceStep,
    _pair_colors,
    singular_corpus,
    strong_three_color,
    two_color_claw_free,
    two_color_singular,
)
from clique_colorer.wagner import (
    GlueSpec,
    WagnerPiece,
    WagnerSequence,
    compose,
    decompose,
    random_sequence,
)
from conftest import PROPERTY_SETTINGS


def test_two_k5_trace():
    coloring, trace = strong_three_color(two_k5_sequence())
    assert trace.cases() == ["base-K5", "glue-K5"]
    assert coloring.colors[:5] == K5_BASE
    assert coloring.colors[5:] == (2, 2, 3)
    assert not any(step.fallback for step in trace.steps)


def test_single_planar_piece():
    seq = WagnerSequence(
        (WagnerPiece.planar(generators.icosahedron()),), (GlueSpec.disjoint(),)
    )
    coloring, trace = strong_three_color(seq)
    assert trace.cases() == ["base-planar"]
    assert coloring.k <= 3
    assert verify_strong(compose(seq)[0], coloring) is None


def test_every_glue_mode_is_traced():
    seq = WagnerSequence(
        (
            WagnerPiece.k5(),
            WagnerPiece.planar(generators.wheel_graph(4)),
            WagnerPiece.planar(generators.cycle_graph(4)),
            WagnerPiece.planar(generators.complete_graph(3)),
        ),
        (
            GlueSpec.disjoint(),
            GlueSpec.edge((0, 1), (0, 1)),
            GlueSpec.one_vertex(4, 0),
            GlueSpec.disjoint(),
        ),
    )
    coloring, trace = strong_three_color(seq)
    cases = trace.cases()
    assert cases[0] == "base-K5"
    assert cases[1] == "glue-equal-contract-triangle"
    assert cases[2:] == ["glue-1sum", "glue-0sum"]
    assert verify_strong(compose(seq)[0], coloring) is None
    assert coloring.k <= 3


def test_trace_json():
    step = TraceStep(1, "glue-1sum", (2, 1, 3))
    assert step.to_json() == {
        "piece": 1,
        "case": "glue-1sum",
        "permutation": [2, 1, 3],
        "fallback": False,
    }
    assert ColoringTrace((step,)).to_json() == [step.to_json()]


def test_invalid_sequence_is_rejected():
    seq = WagnerSequence((WagnerPiece.k5(),), (GlueSpec.one_vertex(0, 0),))
    with pytest.raises(WagnerError):
        strong_three_color(seq)


@PROPERTY_SETTINGS
@given(
    st.integers(min_value=0, max_value=2**32 - 1), st.integers(min_value=1, max_value=5)
)
def test_random_sequences_are_strongly_3_colored(seed, pieces):
    seq = random_sequence(seed, pieces, (3, 8))
    coloring, trace = strong_three_color(seq)
    g, _ = compose(seq)
    assert len(trace.steps) == pieces
    assert coloring.k <= 3
    assert verify_strong(g, coloring) is None


def test_decomposed_fixtures_are_strongly_3_colored():
    names = ("k5", "crossed-triangle-a", "crossed-triangle-b", "icosa-1", "singular-demo")
    for name in names:
        g = FIXTURES[name].graph
        coloring, _ = strong_three_color(decompose(g))
        assert verify_strong(g, coloring) is None
        assert coloring.k <= 3


def test_singular_construction_on_demo_graph():
    coloring = two_color_singular(singular_demo())
    assert coloring.colors == (1, 2, 1, 2, 2, 2)


def test_singular_small_alpha():
    assert two_color_singular(generators.complete_graph(4)).colors == (2, 1, 1, 1)
    coloring = two_color_singular(generators.cycle_graph(4))
    assert coloring.k == 2
    assert verify_clique_coloring(generators.cycle_graph(4), coloring) is None


def test_singular_preconditions():
    with pytest.raises(PreconditionError):
        two_color_singular(generators.cycle_graph(6))
    with pytest.raises(PreconditionError):
        two_color_singular(generators.star_graph(4))


def test_singular_corpus_is_reproducible():
    # every member is an induced subgraph of a claw-free host
    first = singular_corpus(5, 4, max_tries=400)
    assert first == singular_corpus(5, 4, max_tries=400)
    for g in first:
        assert find_singular_vertex(g).verdict
        assert independence_number(g)[0] == 3
        assert is_k33_minor_free(g).verdict
        coloring = two_color_claw_free(g)
        assert coloring.k <= 2
        assert verify_clique_coloring(g, coloring) is None


def test_singular_host_extra_vertex_is_singular():
    host, extra = singular_host()
    assert host.n == 17
    away = [v for v in range(host.n) if v != extra and not host.has_edge(v, extra)]
    assert len(away) == 6
    assert all(host.has_edge(a, b) for a in away for b in away if a != b)
    assert find_singular_vertex(host).verdict


@pytest.mark.parametrize(
    "name",
    [
        "icosa-0",
        "icosa-1",
        "icosa-2",
        "icosa-3",
        "crossed-triangle-a",
        "crossed-triangle-b-w1w2",
        "c6",
    ],
)
def test_claw_free_fixtures_are_2_colored(name):
    g = FIXTURES[name].graph
    coloring = two_color_claw_free(g)
    assert coloring.k <= 2
    assert verify_clique_coloring(g, coloring) is None


def test_claw_free_odd_cycles():
    with pytest.raises(OddCycleException) as e:
        two_color_claw_free(generators.cycle_graph(7))
    assert e.value.order == 7
    with pytest.raises(OddCycleException):
        two_color_claw_free(
            disjoint_union(generators.complete_graph(3), generators.cycle_graph(5))
        )
    assert two_color_claw_free(generators.cycle_graph(3)).k == 2


def test_claw_free_preconditions(claw, k33):
    with pytest.raises(PreconditionError):
        two_color_claw_free(claw)
    rook, _ = line_graph(k33)
    with pytest.raises(PreconditionError, match="K3,3"):
        two_color_claw_free(rook)


@pytest.mark.parametrize(
    "host, piece, case",
    [
        ((0, 2), generators.path_graph(3), "glue-edge-distinct-maximal"),
        ((0, 2), generators.complete_graph(3), "glue-edge-distinct-triangle"),
        ((0, 1), generators.complete_graph(3), "glue-equal-contract-no-triangle"),
        ((0, 1), generators.complete_graph(4), "glue-equal-contract-triangle"),
    ],
)
def test_edge_glue_cases_on_k5(host, piece, case):
    # K5 base colors 0 and 1 alike, 0 and 2 apart
    seq = WagnerSequence(
        (WagnerPiece.k5(), WagnerPiece.planar(piece)),
        (GlueSpec.disjoint(), GlueSpec.edge(host, (0, 1), keep_edge=True)),
    )
    coloring, trace = strong_three_color(seq)
    assert trace.cases() == ["base-K5", case]
    assert not any(step.fallback for step in trace.steps)
    assert verify_strong(compose(seq)[0], coloring) is None


def test_structural_coloring_is_deterministic():
    seq = random_sequence(7, 5)
    first, first_trace = strong_three_color(seq)
    second, second_trace = strong_three_color(seq)
    assert first == second
    assert first_trace.to_json() == second_trace.to_json()


def test_equal_anchors_keep_collapsed_triangles_bichromatic():
    # u=0 v=1 share w=4; u a b is the triangle at the merged vertex
    plus = from_edge_list(
        6, [(0, 1), (0, 2), (0, 3), (2, 3), (0, 4), (1, 4), (4, 5), (1, 5)]
    )
    colors, case, _ = _pair_colors(plus, 0, 1, 1, 1, None)
    assert case == "glue-equal-contract-triangle"
    assert colors[0] == colors[1] == 1
    assert colors[4] != 1
    assert verify_strong(plus, Coloring(colors)) is None


@pytest.mark.slow
def test_thousand_random_sequences_are_strongly_3_colored():
    for seed in range(1000):
        seq = random_sequence(seed, 1 + seed % 6)
        coloring, _ = strong_three_color(seq)
        assert coloring.k <= 3, seed
        assert verify_strong(compose(seq)[0], coloring) is None, seed


@pytest.mark.slow
def test_singular_corpus_is_2_colored():
    corpus = singular_corpus(0, 200)
    assert len(corpus) >= 200
    for g in corpus:
        coloring = two_color_singular(g)
        assert coloring.k <= 2
        assert verify_clique_coloring(g, coloring) is None
