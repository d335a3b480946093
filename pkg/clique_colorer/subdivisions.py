"""
Exhaustive search for Kuratowski subdivisions in small graphs.

Branch vertices are chosen among vertices of large enough degree, and
the edges of the pattern are routed one at a time as internally
disjoint paths through the remaining vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from clique_colorer import settings
from clique_colorer.exceptions import SizeLimitExceeded
from clique_colorer.graph import Graph, VertexSet

K5 = "K5"
K33 = "K3,3"


@dataclass(frozen=True)
class Subdivision:
    kind: str
    branch: VertexSet
    paths: Tuple[VertexSet, ...]
    sides: Optional[Tuple[VertexSet, VertexSet]] = None

    def to_json(self):
        payload = {
            "kind": self.kind,
            "branch": list(self.branch),
            "paths": [list(path) for path in self.paths],
        }
        if self.sides is not None:
            payload["sides"] = [list(side) for side in self.sides]
        return payload


def two_core(g: Graph) -> List[int]:
    """
    Vertices left after repeatedly deleting vertices of degree below two
    """
    degree = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    queue = [v for v in range(g.n) if degree[v] < 2]
    for v in queue:
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                degree[w] -= 1
                if degree[w] == 1:
                    queue.append(w)
    return [v for v in range(g.n) if alive[v]]


class _Router:
    def __init__(self, g, allowed, branch, cancel):
        self.g = g
        self.allowed = allowed
        self.branch = set(branch)
        self.cancel = cancel
        self.used = set()
        self.paths = []

    def _paths(self, s, t):
        # direct edges first, then depth-first in ascending id order
        stack = [(s, [s])]
        while stack:
            v, path = stack.pop()
            if self.g.has_edge(v, t):
                yield path + [t]
            for w in reversed(self.g.adj[v]):
                if (
                    w in self.allowed
                    and w not in self.branch
                    and w not in self.used
                    and w not in path
                ):
                    stack.append((w, path + [w]))

    def route(self, pairs, index=0):
        if index == len(pairs):
            return True
        if self.cancel is not None:
            self.cancel.check()
        s, t = pairs[index]
        for path in self._paths(s, t):
            interior = path[1:-1]
            self.used.update(interior)
            self.paths.append(tuple(path))
            if self.route(pairs, index + 1):
                return True
            self.paths.pop()
            self.used.difference_update(interior)
        return False


def _free_degree(g, v, forbidden):
    return sum(1 for w in g.adj[v] if w not in forbidden)


def _search_k33(g, allowed, cancel):
    candidates = [v for v in sorted(allowed) if g.degree(v) >= 3]
    for branch in combinations(candidates, 6):
        first, rest = branch[0], branch[1:]
        for others in combinations(rest, 2):
            side_a = (first,) + others
            side_b = tuple(v for v in rest if v not in others)
            if any(_free_degree(g, v, set(side_a) - {v}) < 3 for v in side_a):
                continue
            if any(_free_degree(g, v, set(side_b) - {v}) < 3 for v in side_b):
                continue
            pairs = [(a, b) for a in side_a for b in side_b]
            router = _Router(g, allowed, branch, cancel)
            if router.route(pairs):
                return Subdivision(
                    K33, side_a + side_b, tuple(router.paths), (side_a, side_b)
                )
    return None


def _search_k5(g, allowed, cancel):
    candidates = [v for v in sorted(allowed) if g.degree(v) >= 4]
    for branch in combinations(candidates, 5):
        pairs = list(combinations(branch, 2))
        router = _Router(g, allowed, branch, cancel)
        if router.route(pairs):
            return Subdivision(K5, branch, tuple(router.paths))
    return None


def find_k33_subdivision(g: Graph, size_limit=None, cancel=None) -> Optional[Subdivision]:
    limit = settings.SUBDIVISION_SIZE_LIMIT if size_limit is None else size_limit
    if g.n > limit:
        raise SizeLimitExceeded(g.n, limit, "K3,3 subdivision search")
    return _search_k33(g, set(two_core(g)), cancel)


def find_kuratowski_subdivision(
    g: Graph, size_limit=None, cancel=None
) -> Optional[Subdivision]:
    """
    A K5 or K3,3 subdivision, K5 tried first
    """
    limit = settings.KURATOWSKI_SIZE_LIMIT if size_limit is None else size_limit
    if g.n > limit:
        raise SizeLimitExceeded(g.n, limit, "Kuratowski subdivision search")
    allowed = set(two_core(g))
    return _search_k5(g, allowed, cancel) or _search_k33(g, allowed, cancel)


def check_subdivision(g: Graph, sub: Subdivision) -> bool:
    """
    True if the paths of sub are internally disjoint paths of g joining
    exactly the pairs its kind requires
    """
    if sub.kind == K33:
        if sub.sides is None:
            return False
        side_a, side_b = sub.sides
        expected = {frozenset((a, b)) for a in side_a for b in side_b}
        branch = set(side_a) | set(side_b)
        if len(branch) != 6:
            return False
    elif sub.kind == K5:
        branch = set(sub.branch)
        expected = {frozenset(pair) for pair in combinations(sub.branch, 2)}
        if len(branch) != 5:
            return False
    else:
        return False
    seen_pairs = set()
    interior_seen = set()
    for path in sub.paths:
        if len(path) < 2 or len(set(path)) != len(path):
            return False
        if any(not 0 <= v < g.n for v in path):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
            return False
        interior = set(path[1:-1])
        if interior & branch or interior & interior_seen:
            return False
        interior_seen |= interior
        seen_pairs.add(frozenset((path[0], path[-1])))
    return seen_pairs == expected and len(sub.paths) == len(expected)
