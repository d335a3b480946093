"""
Structural predicates, each answered with a witness that can be
checked independently of how it was found.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence

import networkx as nx

from clique_colorer.cliques import triangles
from clique_colorer.exceptions import GraphError, WagnerError
from clique_colorer.graph import (
    Graph,
    complement,
    connected_components,
    induced_subgraph,
    is_complete,
)
from clique_colorer.graph6 import parse_graph6
from clique_colorer.logging import logger
from clique_colorer.subdivisions import (
    K5,
    K33,
    Subdivision,
    check_subdivision,
    find_k33_subdivision,
)


@dataclass(frozen=True)
class RecognitionReport:
    predicate: str
    verdict: bool
    witness: Optional[Dict[str, Any]] = None

    def to_json(self):
        return {
            "predicate": self.predicate,
            "verdict": self.verdict,
            "witness": self.witness,
        }


def is_claw_free(g: Graph) -> RecognitionReport:
    for v in range(g.n):
        for leaves in combinations(g.adj[v], 3):
            a, b, c = leaves
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return RecognitionReport(
                    "claw-free", False, {"center": v, "leaves": list(leaves)}
                )
    return RecognitionReport("claw-free", True)


def is_triangle_free(g: Graph) -> RecognitionReport:
    for triangle in triangles(g):
        return RecognitionReport("triangle-free", False, {"triangle": list(triangle)})
    return RecognitionReport("triangle-free", True)


def is_odd_cycle(g: Graph) -> RecognitionReport:
    verdict = (
        g.n >= 3
        and g.n % 2 == 1
        and all(g.degree(v) == 2 for v in range(g.n))
        and len(connected_components(g)) == 1
    )
    return RecognitionReport("odd-cycle", verdict, {"order": g.n} if verdict else None)


def planarity_embedding(g: Graph) -> Optional[Dict[int, List[int]]]:
    """
    Clockwise rotation system of a planar embedding, or None
    """
    planar, embedding = nx.check_planarity(g.to_networkx())
    if not planar:
        return None
    return {v: list(embedding.neighbors_cw_order(v)) for v in range(g.n)}


def _kuratowski_from_counterexample(certificate: nx.Graph) -> Subdivision:
    degree = dict(certificate.degree())
    branch = sorted(v for v, d in degree.items() if d >= 3)
    paths = []
    for start in branch:
        for first in sorted(certificate.neighbors(start)):
            path = [start, first]
            while degree[path[-1]] == 2:
                step = [w for w in certificate.neighbors(path[-1]) if w != path[-2]]
                path.append(step[0])
            if start < path[-1]:
                paths.append(tuple(int(v) for v in path))
    paths.sort()
    if len(branch) == 5:
        return Subdivision(K5, tuple(branch), tuple(paths))
    # two-color the branch vertices along the paths
    side = {branch[0]: 0}
    queue = [branch[0]]
    for v in queue:
        for path in paths:
            if v in (path[0], path[-1]):
                other = path[-1] if path[0] == v else path[0]
                if other not in side:
                    side[other] = 1 - side[v]
                    queue.append(other)
    side_a = tuple(v for v in branch if side.get(v) == 0)
    side_b = tuple(v for v in branch if side.get(v) == 1)
    return Subdivision(K33, side_a + side_b, tuple(paths), (side_a, side_b))


def is_planar(g: Graph) -> RecognitionReport:
    planar, certificate = nx.check_planarity(g.to_networkx(), counterexample=True)
    if planar:
        rotation = [list(certificate.neighbors_cw_order(v)) for v in range(g.n)]
        return RecognitionReport("planar", True, {"rotation": rotation})
    sub = _kuratowski_from_counterexample(certificate)
    return RecognitionReport("planar", False, sub.to_json())


def k33_subdivision_report(g: Graph, cancel=None) -> RecognitionReport:
    sub = find_k33_subdivision(g, cancel=cancel)
    if sub is None:
        return RecognitionReport("k33-subdivision", False)
    return RecognitionReport("k33-subdivision", True, sub.to_json())


def is_k33_minor_free(g: Graph) -> RecognitionReport:
    from clique_colorer.wagner import NotK33MinorFree, decompose

    result = decompose(g)
    if isinstance(result, NotK33MinorFree):
        return RecognitionReport("k33-minor-free", False, result.to_json())
    return RecognitionReport(
        "k33-minor-free",
        True,
        {"pieces": len(result.pieces), "sequence": result.to_json()},
    )


def find_induced_copy(g: Graph, pattern: Graph) -> Optional[List[int]]:
    """
    Embedding of pattern as an induced subgraph of g: entry i is the
    vertex of g playing pattern vertex i. Lowest ids are tried first.
    """
    if pattern.n > g.n:
        return None
    # visit pattern vertices so each one after the first has an earlier neighbor
    order, seen = [], set()
    for start in range(pattern.n):
        if start in seen:
            continue
        seen.add(start)
        queue = [start]
        for v in queue:
            order.append(v)
            for w in pattern.adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    image = [None] * pattern.n
    taken = set()

    def candidates(x):
        placed = [y for y in pattern.adj[x] if image[y] is not None]
        if placed:
            pool = g.neighbor_set(image[placed[0]])
        else:
            pool = range(g.n)
        for v in sorted(pool):
            if v in taken or g.degree(v) < pattern.degree(x):
                continue
            if all(
                g.has_edge(v, image[y]) == pattern.has_edge(x, y)
                for y in range(pattern.n)
                if image[y] is not None
            ):
                yield v

    def extend(position):
        if position == len(order):
            return True
        x = order[position]
        for v in candidates(x):
            image[x] = v
            taken.add(v)
            if extend(position + 1):
                return True
            taken.discard(v)
            image[x] = None
        return False

    return list(image) if extend(0) else None


def is_line_graph(g: Graph) -> RecognitionReport:
    from clique_colorer.fixtures import beineke_graphs

    for name, pattern in beineke_graphs():
        image = find_induced_copy(g, pattern)
        if image is not None:
            return RecognitionReport(
                "line-graph", False, {"forbidden": name, "image": image}
            )
    return RecognitionReport("line-graph", True)


def _prismatic_failure(g: Graph):
    for triangle in triangles(g):
        for v in range(g.n):
            if v in triangle:
                continue
            hits = sum(1 for u in triangle if g.has_edge(u, v))
            if hits != 1:
                return {
                    "triangle": list(triangle),
                    "vertex": v,
                    "neighbors_in_triangle": hits,
                }
    return None


def is_prismatic(g: Graph) -> RecognitionReport:
    failure = _prismatic_failure(g)
    return RecognitionReport("prismatic", failure is None, failure)


def is_antiprismatic(g: Graph) -> RecognitionReport:
    failure = _prismatic_failure(complement(g))
    if failure is not None:
        failure = {
            "stable_set": failure["triangle"],
            "vertex": failure["vertex"],
            "non_neighbors_in_set": failure["neighbors_in_triangle"],
        }
    return RecognitionReport("antiprismatic", failure is None, failure)


def find_singular_vertex(g: Graph) -> RecognitionReport:
    """
    A vertex whose non-neighbors are pairwise adjacent
    """
    for v in range(g.n):
        others = [u for u in range(g.n) if u != v and not g.has_edge(u, v)]
        if all(g.has_edge(a, b) for a, b in combinations(others, 2)):
            return RecognitionReport("singular-vertex", True, {"vertex": v})
    return RecognitionReport("singular-vertex", False)


def find_twins(g: Graph) -> RecognitionReport:
    """
    Two adjacent vertices with the same closed neighborhood
    """
    for u, v in g.edges():
        if g.neighbor_set(u) - {v} == g.neighbor_set(v) - {u}:
            return RecognitionReport("twins", True, {"pair": [u, v]})
    return RecognitionReport("twins", False)


RECOGNIZERS: Dict[str, Callable[[Graph], RecognitionReport]] = {
    "claw-free": is_claw_free,
    "triangle-free": is_triangle_free,
    "odd-cycle": is_odd_cycle,
    "planar": is_planar,
    "k33-subdivision": k33_subdivision_report,
    "k33-minor-free": is_k33_minor_free,
    "line-graph": is_line_graph,
    "prismatic": is_prismatic,
    "antiprismatic": is_antiprismatic,
    "singular-vertex": find_singular_vertex,
    "twins": find_twins,
}


def recognize(g: Graph, predicate: str) -> RecognitionReport:
    try:
        recognizer = RECOGNIZERS[predicate]
    except KeyError:
        raise ValueError(f"unknown predicate {predicate!r}")
    report = recognizer(g)
    logger.debug(f"{predicate}: {report.verdict}")
    return report


def recognize_all(g: Graph, predicates: Sequence[str] = None) -> List[RecognitionReport]:
    return [recognize(g, name) for name in (predicates or list(RECOGNIZERS))]


def _euler_holds(g: Graph, rotation) -> bool:
    if len(rotation) != g.n:
        return False
    for v in range(g.n):
        if sorted(rotation[v]) != list(g.adj[v]):
            return False
    position = [{w: i for i, w in enumerate(rotation[v])} for v in range(g.n)]
    visited = set()
    faces = [0] * g.n
    component_of = {}
    for index, members in enumerate(connected_components(g)):
        for v in members:
            component_of[v] = index
    for v in range(g.n):
        for w in rotation[v]:
            if (v, w) in visited:
                continue
            faces[component_of[v]] += 1
            a, b = v, w
            while (a, b) not in visited:
                visited.add((a, b))
                around = rotation[b]
                a, b = b, around[(position[b][a] - 1) % len(around)]
    for index, members in enumerate(connected_components(g)):
        edges = sum(g.degree(v) for v in members) // 2
        if edges and len(members) - edges + faces[index] != 2:
            return False
    return True


def _check_subdivision_payload(g, witness):
    sides = witness.get("sides")
    sub = Subdivision(
        witness["kind"],
        tuple(witness["branch"]),
        tuple(tuple(path) for path in witness["paths"]),
        tuple(tuple(side) for side in sides) if sides is not None else None,
    )
    return check_subdivision(g, sub)


def _check_minor_free_sequence(g: Graph, witness) -> bool:
    from clique_colorer.wagner import WagnerSequence, compose, validate

    try:
        seq = WagnerSequence.from_json(witness["sequence"])
        return not validate(seq) and compose(seq)[0] == g
    except (KeyError, TypeError, WagnerError):
        return False


def _check_k33_piece(g: Graph, witness) -> bool:
    """
    The piece must be g's induced subgraph on its vertices plus virtual
    edges, each standing for a component of the rest attached at exactly
    that pair; a 3-connected nonplanar piece other than K5 has a K3,3
    minor
    """
    try:
        members = list(witness["vertices"])
        piece = parse_graph6(witness["graph6"])
        virtual = {tuple(sorted(e)) for e in witness["virtual_edges"]}
    except (KeyError, TypeError, ValueError, GraphError):
        return False
    if (
        len(members) < 6
        or len(set(members)) != len(members)
        or any(not 0 <= v < g.n for v in members)
        or piece.n != len(members)
        or any(len(e) != 2 or not 0 <= e[0] < e[1] < piece.n for e in virtual)
    ):
        return False
    for i, j in combinations(range(piece.n), 2):
        expected = g.has_edge(members[i], members[j]) or (i, j) in virtual
        if piece.has_edge(i, j) != expected:
            return False

    inside = set(members)
    rest = [v for v in range(g.n) if v not in inside]
    attachments = set()
    if rest:
        outside, rest_members = induced_subgraph(g, rest)
        index = {v: i for i, v in enumerate(members)}
        for component in connected_components(outside):
            touched = {
                index[w]
                for c in component
                for w in g.neighbor_set(rest_members[c])
                if w in index
            }
            if len(touched) == 2:
                attachments.add(tuple(sorted(touched)))
    if not virtual <= attachments:
        return False

    if is_complete(piece) and piece.n == 5:
        return False
    return (
        nx.node_connectivity(piece.to_networkx()) >= 3
        and planarity_embedding(piece) is None
    )


def verify_witness(g: Graph, report: RecognitionReport) -> bool:
    """
    Re-checks a report's witness against g without rerunning the search
    that produced it. Verdicts that carry no witness are accepted.
    """
    witness = report.witness
    name = report.predicate
    if witness is None:
        return not (
            (name == "claw-free" and not report.verdict)
            or (name == "triangle-free" and not report.verdict)
            or (name in ("planar", "k33-subdivision") and report.verdict)
            or (name == "line-graph" and not report.verdict)
            or (name in ("singular-vertex", "twins") and report.verdict)
        )
    if name == "claw-free":
        v, (a, b, c) = witness["center"], witness["leaves"]
        return (
            all(g.has_edge(v, x) for x in (a, b, c))
            and not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c))
        )
    if name == "triangle-free":
        a, b, c = witness["triangle"]
        return g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    if name == "odd-cycle":
        return report.verdict == is_odd_cycle(g).verdict
    if name == "planar":
        if report.verdict:
            return _euler_holds(g, witness["rotation"])
        return _check_subdivision_payload(g, witness)
    if name == "k33-subdivision":
        return witness["kind"] == K33 and _check_subdivision_payload(g, witness)
    if name == "k33-minor-free":
        if report.verdict:
            return _check_minor_free_sequence(g, witness)
        return _check_k33_piece(g, witness)
    if name == "line-graph":
        from clique_colorer.fixtures import beineke_graphs

        pattern = dict(beineke_graphs())[witness["forbidden"]]
        image = witness["image"]
        return len(set(image)) == pattern.n and all(
            g.has_edge(image[x], image[y]) == pattern.has_edge(x, y)
            for x, y in combinations(range(pattern.n), 2)
        )
    if name in ("prismatic", "antiprismatic"):
        target = g if name == "prismatic" else complement(g)
        corners = witness.get("triangle", witness.get("stable_set"))
        v = witness["vertex"]
        a, b, c = corners
        hits = sum(1 for u in corners if target.has_edge(u, v))
        return (
            target.has_edge(a, b)
            and target.has_edge(b, c)
            and target.has_edge(a, c)
            and v not in corners
            and hits != 1
        )
    if name == "singular-vertex":
        v = witness["vertex"]
        others = [u for u in range(g.n) if u != v and not g.has_edge(u, v)]
        return all(g.has_edge(a, b) for a, b in combinations(others, 2))
    if name == "twins":
        u, v = witness["pair"]
        return g.has_edge(u, v) and g.neighbor_set(u) - {v} == g.neighbor_set(v) - {u}
    raise ValueError(f"unknown predicate {name!r}")
