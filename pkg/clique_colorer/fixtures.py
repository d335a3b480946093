"""
Named graphs with the predicates they are known to satisfy.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from clique_colorer import generators
from clique_colorer.graph import (
    Graph,
    complement,
    delete_vertices,
    from_edge_list,
    line_graph,
)

# The nine minimal non-line graphs (Beineke 1970). Each is a diamond
# {0,1,2,3} (triangles 012 and 013, 2 and 3 nonadjacent) whose two
# triangles are made odd by one or two extra vertices, except the claw.
BEINEKE_EDGES: Tuple[Tuple[str, int, Tuple[Tuple[int, int], ...]], ...] = (
    # claw K1,3
    ("beineke-1", 4, ((0, 1), (0, 2), (0, 3))),
    # K5 minus an edge
    (
        "beineke-2",
        5,
        ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (1, 4), (2, 4), (3, 4)),
    ),
    # diamond plus a vertex joined to both tips
    ("beineke-3", 5, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4))),
    # diamond with a pendant vertex at each tip
    ("beineke-4", 6, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5))),
    # diamond whose tips are joined by a path of length three
    (
        "beineke-5",
        6,
        ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5)),
    ),
    # diamond, triangle 1-2-5 on one side, 4 adjacent to 2 and 5
    (
        "beineke-6",
        6,
        ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (2, 5), (1, 5), (4, 5)),
    ),
    # diamond, pendant 4 at tip 2, vertex 5 completing K4 on 0-1-3-5
    (
        "beineke-7",
        6,
        ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (0, 5), (1, 5), (3, 5)),
    ),
    # wheel W5: hub 0, rim 1-2-3-4-5
    (
        "beineke-8",
        6,
        (
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (1, 5),
        ),
    ),
    # two K4s 0-1-2-4 and 0-1-3-5 sharing the edge 01
    (
        "beineke-9",
        6,
        (
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (0, 4),
            (1, 4),
            (2, 4),
            (0, 5),
            (1, 5),
            (3, 5),
        ),
    ),
)


def beineke_graphs() -> List[Tuple[str, Graph]]:
    return [(name, from_edge_list(n, edges)) for name, n, edges in BEINEKE_EDGES]


# Vertex order of the two nine-vertex constructions below
CROSSED_TRIANGLE_VERTICES = ("v", "u", "w", "v1", "v2", "u1", "u2", "w1", "w2")

_CROSSED_SHARED = (
    ("v", "u"),
    ("v", "w"),
    ("u", "w"),
    ("v", "v1"),
    ("v", "v2"),
    ("u", "u1"),
    ("u", "u2"),
    ("w", "w1"),
    ("w", "w2"),
    ("v1", "v2"),
    ("u1", "u2"),
    ("u1", "v1"),
    ("u2", "v2"),
)
_CROSSED_CASES = {
    "a": (("w1", "u1"), ("w1", "v2"), ("w2", "u2"), ("w2", "v1")),
    "b": (("w1", "u2"), ("w1", "v1"), ("w2", "u1"), ("w2", "v2")),
}


def crossed_triangle_graph(case: str, with_w1w2: bool = False) -> Graph:
    """
    Claw-free planar graph given through the edges of its complement:
    a triangle vuw, two private neighbors per corner, and the cross
    edges of the chosen case
    """
    index = {name: i for i, name in enumerate(CROSSED_TRIANGLE_VERTICES)}
    pairs = list(_CROSSED_SHARED) + list(_CROSSED_CASES[case])
    if with_w1w2:
        pairs.append(("w1", "w2"))
    co_graph = from_edge_list(len(index), [(index[a], index[b]) for a, b in pairs])
    return complement(co_graph)


def icosa(k: int) -> Graph:
    """
    Icosahedron with k pairwise adjacent vertices deleted, k in 0..3
    """
    if not 0 <= k <= 3:
        raise ValueError("icosa(-k) is defined for k in 0..3")
    g = generators.icosahedron()
    first = 0
    second = g.neighbors(first)[0]
    third = min(g.neighbor_set(first) & g.neighbor_set(second))
    deleted, _ = delete_vertices(g, (first, second, third)[:k])
    return deleted


def singular_host() -> Tuple[Graph, int]:
    """
    Line graph of K6 on h1..h6 plus the pendant edge h0h1, with one extra
    vertex joined to every edge of that graph not incident with h1.
    Returns the graph and the id of the extra vertex.
    """
    root = from_edge_list(
        7, [(0, 1)] + [(i, j) for i in range(1, 7) for j in range(i + 1, 7)]
    )
    lines, edges = line_graph(root)
    extra = lines.n
    adj = [list(a) for a in lines.adj] + [[]]
    for i, (a, b) in enumerate(edges):
        if 1 not in (a, b):
            adj[i].append(extra)
            adj[extra].append(i)
    return Graph(lines.n + 1, adj), extra


def singular_demo() -> Graph:
    """
    x=0 adjacent to a=1, b=2, r=3, s=4; t=5 adjacent to a and b; ab an
    edge. Its only non-neighbor t makes x singular, and {r, s, t} is a
    maximum independent set.
    """
    return from_edge_list(
        6, [(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (1, 2)]
    )


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    provenance: str
    predicates: Dict[str, bool] = field(default_factory=dict)
    chi_c_at_most: Optional[int] = None


class FixtureSet:
    def __init__(self, fixtures):
        self._fixtures = {fixture.name: fixture for fixture in fixtures}

    def __getitem__(self, name) -> Fixture:
        return self._fixtures[name]

    def __contains__(self, name):
        return name in self._fixtures

    def __iter__(self):
        return iter(self._fixtures.values())

    def __len__(self):
        return len(self._fixtures)

    def names(self) -> List[str]:
        return list(self._fixtures)


def _build_fixtures():
    fixtures = [
        Fixture("k4", generators.complete_graph(4), "complete graph K4", {"planar": True}),
        Fixture(
            "k5",
            generators.complete_graph(5),
            "complete graph K5, the non-planar Wagner piece",
            {"planar": False, "k33-minor-free": True, "claw-free": True},
            chi_c_at_most=2,
        ),
        Fixture(
            "k33",
            generators.complete_bipartite_graph(3, 3),
            "complete bipartite graph K3,3",
            {"planar": False, "k33-minor-free": False, "claw-free": False},
        ),
        Fixture(
            "petersen",
            generators.petersen_graph(),
            "Petersen graph: cubic, non-planar, triangle-free",
            {
                "planar": False,
                "k33-minor-free": False,
                "claw-free": False,
                "triangle-free": True,
            },
        ),
        Fixture(
            "claw",
            generators.star_graph(3),
            "the claw K1,3",
            {"claw-free": False, "line-graph": False},
        ),
        Fixture("c5", generators.cycle_graph(5), "5-cycle", {"odd-cycle": True}),
        Fixture(
            "c6",
            generators.cycle_graph(6),
            "6-cycle",
            {"odd-cycle": False},
            chi_c_at_most=2,
        ),
        Fixture("c7", generators.cycle_graph(7), "7-cycle", {"odd-cycle": True}),
        Fixture(
            "prism",
            generators.prism_graph(),
            "triangular prism: two triangles joined by a perfect matching",
            {"prismatic": True, "planar": True},
        ),
        Fixture(
            "w4",
            generators.wheel_graph(4),
            "wheel with a 4-cycle rim",
            {"planar": True, "line-graph": True},
        ),
        Fixture(
            "singular-demo",
            singular_demo(),
            "vertex 0 is singular; {3, 4, 5} is a maximum independent set",
            {"singular-vertex": True, "k33-minor-free": True},
            chi_c_at_most=2,
        ),
    ]
    for name, graph in beineke_graphs():
        predicates = {"line-graph": False, "claw-free": name != "beineke-1"}
        fixtures.append(
            Fixture(name, graph, "minimal non-line graph (Beineke)", predicates)
        )
    for case in ("a", "b"):
        for with_w1w2 in (False, True):
            suffix = "-w1w2" if with_w1w2 else ""
            fixtures.append(
                Fixture(
                    f"crossed-triangle-{case}{suffix}",
                    crossed_triangle_graph(case, with_w1w2),
                    f"complement of the nine-vertex construction, case ({case})"
                    + (" with the optional w1-w2 edge" if with_w1w2 else ""),
                    {"claw-free": True, "planar": True, "k33-minor-free": True},
                    chi_c_at_most=2,
                )
            )
    for k in range(4):
        fixtures.append(
            Fixture(
                f"icosa-{k}",
                icosa(k),
                f"icosahedron minus {k} pairwise adjacent vertices",
                {"planar": True, "claw-free": True, "k33-minor-free": True},
                chi_c_at_most=2,
            )
        )
    host, _ = singular_host()
    fixtures.append(
        Fixture(
            "singular-host",
            host,
            "line graph of K6 plus a pendant edge, with a vertex joined to the "
            "edges missing h1",
            {"claw-free": True, "singular-vertex": True},
        )
    )
    return FixtureSet(fixtures)


FIXTURES = _build_fixtures()


def two_k5_sequence():
    """
    Two K5 pieces glued on an edge that is kept
    """
    from clique_colorer.wagner import GlueSpec, WagnerPiece, WagnerSequence

    return WagnerSequence(
        (WagnerPiece.k5(), WagnerPiece.k5()),
        (GlueSpec.disjoint(), GlueSpec.edge((0, 1), (0, 1), keep_edge=True)),
    )
