from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence, Tuple

from clique_colorer.cancellation import CancelToken
from clique_colorer.cliques import clique_hypergraph, triangles
from clique_colorer.exceptions import (
    ColoringError,
    Infeasible,
    InternalFault,
    PreconditionError,
)
from clique_colorer.graph import Coloring, Graph, VertexSet, is_connected
from clique_colorer.logging import logger

CHECK_EVERY = 256


@dataclass(frozen=True)
class ColoringConstraint:
    fixed: Mapping[int, int] = field(default_factory=dict)
    max_colors: int = 3

    def __post_init__(self):
        if self.max_colors < 1:
            raise ColoringError(f"max_colors must be positive, got {self.max_colors}")
        for v, color in self.fixed.items():
            if not 1 <= color <= self.max_colors:
                raise ColoringError(
                    f"fixed color {color} of vertex {v} outside 1..{self.max_colors}"
                )


@dataclass(frozen=True)
class Violation:
    kind: str
    vertices: VertexSet

    def to_json(self):
        return {"kind": self.kind, "vertices": list(self.vertices)}


def _colors_of(g, c):
    colors = c.colors if isinstance(c, Coloring) else tuple(c)
    if len(colors) != g.n:
        raise ColoringError(
            f"coloring has {len(colors)} entries for a graph with {g.n} vertices"
        )
    return colors


def _monochromatic(colors, vertices):
    first = colors[vertices[0]]
    return all(colors[v] == first for v in vertices)


def verify_clique_coloring(g: Graph, c) -> Optional[Violation]:
    colors = _colors_of(g, c)
    for clique in clique_hypergraph(g).hyperedges:
        if _monochromatic(colors, clique):
            return Violation("clique", clique)
    return None


def verify_strong(g: Graph, c) -> Optional[Violation]:
    violation = verify_clique_coloring(g, c)
    if violation is not None:
        return violation
    colors = _colors_of(g, c)
    for triangle in triangles(g):
        if _monochromatic(colors, triangle):
            return Violation("triangle", triangle)
    return None


def coloring_hyperedges(g: Graph, strong: bool) -> List[VertexSet]:
    hyperedges = list(clique_hypergraph(g).hyperedges)
    if strong:
        known = set(hyperedges)
        hyperedges += [t for t in triangles(g) if t not in known]
    return hyperedges


class _HyperedgeSearch:
    """
    Backtracking over vertices in ascending id order, colors lowest first.
    A hyperedge whose assigned vertices all share one color and which has
    a single unassigned vertex bans that color for the last vertex.
    """

    def __init__(self, n, hyperedges, k, fixed, cancel):
        self.n = n
        self.hyperedges = [tuple(e) for e in hyperedges]
        self.k = k
        self.fixed = dict(fixed)
        self.cancel = cancel
        self.incidence = [[] for _ in range(n)]
        for index, edge in enumerate(self.hyperedges):
            for v in edge:
                self.incidence[v].append(index)
        self.colors = [0] * n
        self.unassigned = [len(e) for e in self.hyperedges]
        self.counts = [[0] * (k + 1) for _ in self.hyperedges]
        self.banned = [[0] * (k + 1) for _ in range(n)]
        self.nodes = 0

    def _allowed(self, v):
        if v in self.fixed:
            return (self.fixed[v],)
        return range(1, self.k + 1)

    def _assign(self, v, color):
        ok = True
        trail = []
        self.colors[v] = color
        for index in self.incidence[v]:
            size = len(self.hyperedges[index])
            self.unassigned[index] -= 1
            self.counts[index][color] += 1
            if self.counts[index][color] == size:
                ok = False
            elif self.unassigned[index] == 1 and self.counts[index][color] == size - 1:
                last = next(u for u in self.hyperedges[index] if self.colors[u] == 0)
                self.banned[last][color] += 1
                trail.append((last, color))
                if all(self.banned[last][c] for c in self._allowed(last)):
                    ok = False
        return ok, trail

    def _unassign(self, v, color, trail):
        for last, banned_color in trail:
            self.banned[last][banned_color] -= 1
        for index in self.incidence[v]:
            self.unassigned[index] += 1
            self.counts[index][color] -= 1
        self.colors[v] = 0

    def _expand(self, v, used):
        if v == self.n:
            return True
        self.nodes += 1
        if self.cancel is not None and self.nodes % CHECK_EVERY == 0:
            self.cancel.check()
        if v in self.fixed:
            candidates = (self.fixed[v],)
        elif self.fixed:
            candidates = range(1, self.k + 1)
        else:
            # colors are interchangeable: never open more than one new color
            candidates = range(1, min(self.k, used + 1) + 1)
        for color in candidates:
            if self.banned[v][color]:
                continue
            ok, trail = self._assign(v, color)
            if ok and self._expand(v + 1, max(used, color)):
                return True
            self._unassign(v, color, trail)
        return False

    def run(self):
        for v, color in self.fixed.items():
            if not 0 <= v < self.n:
                raise ColoringError(f"fixed vertex {v} out of range for n={self.n}")
        if self._expand(0, 0):
            return tuple(self.colors)
        return None


def solve_hyperedges(
    n: int,
    hyperedges: Sequence[Sequence[int]],
    k: int,
    fixed: Mapping[int, int] = None,
    cancel: CancelToken = None,
) -> Optional[Tuple[int, ...]]:
    """
    Finds a coloring with colors 1..k leaving no hyperedge monochromatic,
    honoring the fixed colors, or None
    """
    return _HyperedgeSearch(n, hyperedges, k, fixed or {}, cancel).run()


def clique_chromatic_number(
    g: Graph,
    strong: bool = False,
    constraint: ColoringConstraint = None,
    cancel: CancelToken = None,
) -> Tuple[int, Coloring]:
    hyperedges = coloring_hyperedges(g, strong)
    if constraint is not None:
        fixed = dict(constraint.fixed)
        first = max(fixed.values(), default=1)
        last = constraint.max_colors
    else:
        fixed = {}
        first, last = 1, max(g.n, 1)

    for k in range(first, last + 1):
        logger.debug(f"trying k={k} on n={g.n} with {len(hyperedges)} hyperedges")
        colors = solve_hyperedges(g.n, hyperedges, k, fixed, cancel)
        if colors is None:
            continue
        coloring = Coloring(colors)
        verify = verify_strong if strong else verify_clique_coloring
        violation = verify(g, coloring)
        if violation is not None:
            raise InternalFault(f"solver produced an invalid coloring at {violation}")
        return coloring.k, coloring

    if constraint is not None:
        raise Infeasible(
            f"no {'strong ' if strong else ''}clique-coloring with at most "
            f"{constraint.max_colors} colors honors the fixed colors"
        )
    raise InternalFault(f"no clique-coloring with {last} colors on n={g.n}")


def extend_fixed_triangle(
    g: Graph,
    triangle: Sequence[int],
    phi: Mapping[int, int],
    cancel: CancelToken = None,
) -> Coloring:
    """
    Extends a coloring of a triangle of a connected planar graph to a
    strong 3-clique-coloring of the whole graph. Such an extension
    always exists, so a failed search is reported as an internal fault.
    """
    from clique_colorer.recognizers import planarity_embedding

    corners = tuple(sorted(triangle))
    if len(set(corners)) != 3 or any(not 0 <= v < g.n for v in corners):
        raise PreconditionError(f"{list(triangle)} is not a vertex triple of the graph")
    a, b, c = corners
    if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise PreconditionError(f"{list(corners)} is not a triangle")
    if set(phi) != set(corners):
        raise PreconditionError("phi must color exactly the triangle")
    if any(color not in (1, 2, 3) for color in phi.values()):
        raise PreconditionError("phi must use colors from {1, 2, 3}")
    if len(set(phi.values())) == 1:
        raise PreconditionError("phi leaves the triangle monochromatic")
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if planarity_embedding(g) is None:
        raise PreconditionError("graph is not planar")

    try:
        _, coloring = clique_chromatic_number(
            g, strong=True, constraint=ColoringConstraint(dict(phi), 3), cancel=cancel
        )
    except Infeasible:
        raise InternalFault(
            f"triangle coloring {dict(phi)} did not extend to a strong 3-clique-coloring"
        )
    return coloring


def chromatic_number(g: Graph, cancel: CancelToken = None) -> Tuple[int, Coloring]:
    """
    Ordinary vertex-coloring number by DSATUR backtracking
    """
    if g.n == 0:
        return 0, Coloring(())
    nbrs = [g.neighbor_set(v) for v in range(g.n)]
    colors = [0] * g.n
    nodes = [0]

    def pick():
        best, best_key = None, None
        for v in range(g.n):
            if colors[v]:
                continue
            saturation = len({colors[w] for w in nbrs[v] if colors[w]})
            key = (saturation, len(nbrs[v]), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def search(done, used, k):
        if done == g.n:
            return True
        nodes[0] += 1
        if cancel is not None and nodes[0] % CHECK_EVERY == 0:
            cancel.check()
        v = pick()
        taken = {colors[w] for w in nbrs[v]}
        for color in range(1, min(k, used + 1) + 1):
            if color in taken:
                continue
            colors[v] = color
            if search(done + 1, max(used, color), k):
                return True
            colors[v] = 0
        return False

    for k in range(1, g.n + 1):
        if search(0, 0, k):
            return k, Coloring(colors)
        colors = [0] * g.n
    raise InternalFault("vertex coloring with n colors failed")
