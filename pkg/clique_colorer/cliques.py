from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from clique_colorer.graph import Graph, VertexSet, complement


@dataclass(frozen=True)
class CliqueHypergraph:
    """
    Maximal cliques of size at least two, each sorted, listed in
    lexicographic order
    """

    vertex_count: int
    hyperedges: Tuple[VertexSet, ...]

    def __len__(self):
        return len(self.hyperedges)

    def incidence(self) -> List[List[int]]:
        around = [[] for _ in range(self.vertex_count)]
        for index, edge in enumerate(self.hyperedges):
            for v in edge:
                around[v].append(index)
        return around


def maximal_cliques(g: Graph) -> List[VertexSet]:
    """
    Bron-Kerbosch with pivoting. The pivot is the vertex of P u X with
    the most neighbors in P, lowest id on ties.
    """
    if g.n == 0:
        return []
    nbrs = [g.neighbor_set(v) for v in range(g.n)]
    found = []

    def expand(r, p, x):
        if not p and not x:
            found.append(tuple(sorted(r)))
            return
        pivot = max(sorted(p | x), key=lambda u: len(p & nbrs[u]))
        for v in sorted(p - nbrs[pivot]):
            expand(r + [v], p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    expand([], set(range(g.n)), set())
    found.sort()
    return found


def clique_hypergraph(g: Graph) -> CliqueHypergraph:
    return CliqueHypergraph(
        g.n, tuple(clique for clique in maximal_cliques(g) if len(clique) >= 2)
    )


def triangles(g: Graph) -> List[VertexSet]:
    found = []
    for u in range(g.n):
        for v in g.adj[u]:
            if v <= u:
                continue
            for w in g.adj[v]:
                if w > v and g.has_edge(u, w):
                    found.append((u, v, w))
    return found


def _greedy_color_order(candidates, nbrs):
    classes = []
    for v in candidates:
        for members in classes:
            if not any(w in nbrs[v] for w in members):
                members.append(v)
                break
        else:
            classes.append([v])
    return [(v, color) for color, members in enumerate(classes, 1) for v in members]


def maximum_clique(g: Graph) -> VertexSet:
    """
    Branch and bound; a greedy coloring of the candidates bounds how
    much the current clique can still grow
    """
    nbrs = [g.neighbor_set(v) for v in range(g.n)]
    best = []

    def expand(clique, candidates):
        nonlocal best
        order = _greedy_color_order(candidates, nbrs)
        while order:
            v, bound = order.pop()
            if len(clique) + bound <= len(best):
                return
            grown = clique + [v]
            remaining = [w for w, _ in order if w in nbrs[v]]
            if remaining:
                expand(grown, remaining)
            elif len(grown) > len(best):
                best = grown

    start = sorted(range(g.n), key=lambda v: (-len(nbrs[v]), v))
    expand([], start)
    return tuple(sorted(best))


def independence_number(g: Graph) -> Tuple[int, VertexSet]:
    witness = maximum_clique(complement(g))
    return len(witness), witness
