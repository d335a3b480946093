"""
Colorings built from structure instead of search: strong 3-clique-
colorings along a Wagner sequence, and 2-clique-colorings of claw-free
graphs with no K3,3 minor.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple

import numpy as np

from clique_colorer.cancellation import CancelToken
from clique_colorer.cliques import independence_number, maximal_cliques, triangles
from clique_colorer.exceptions import (
    ConstructionFailed,
    Infeasible,
    InternalFault,
    OddCycleException,
    PreconditionError,
    WagnerError,
)
from clique_colorer.graph import (
    Coloring,
    Graph,
    add_edge,
    connected_components,
    contract_edge,
    induced_subgraph,
    is_complete,
)
from clique_colorer.logging import logger
from clique_colorer.recognizers import (
    find_singular_vertex,
    is_claw_free,
    is_k33_minor_free,
    is_odd_cycle,
)
from clique_colorer.solver import (
    ColoringConstraint,
    clique_chromatic_number,
    coloring_hyperedges,
    extend_fixed_triangle,
    solve_hyperedges,
    verify_clique_coloring,
    verify_strong,
)
from clique_colorer.wagner import (
    DISJOINT,
    ONE_VERTEX,
    WagnerSequence,
    compose,
    compose_raw,
    validate,
)

K5_BASE = (1, 1, 2, 2, 3)
COLORS = (1, 2, 3)


@dataclass(frozen=True)
class TraceStep:
    piece_index: int
    case: str
    permutation: Optional[Tuple[int, int, int]] = None
    fallback: bool = False

    def to_json(self):
        return {
            "piece": self.piece_index,
            "case": self.case,
            "permutation": list(self.permutation) if self.permutation else None,
            "fallback": self.fallback,
        }


@dataclass(frozen=True)
class ColoringTrace:
    steps: Tuple[TraceStep, ...]

    def to_json(self):
        return [step.to_json() for step in self.steps]

    def cases(self) -> List[str]:
        return [step.case for step in self.steps]


def _rename(colors: Sequence[int], wanted: Mapping[int, int]):
    """
    Lexicographically smallest permutation p of 1..3 with
    p[colors[v]] == wanted[v] for every v in wanted
    """
    for image in permutations(COLORS):
        if all(image[colors[v] - 1] == color for v, color in wanted.items()):
            return image
    return None


def _apply(colors: Sequence[int], permutation: Sequence[int]) -> List[int]:
    return [permutation[c - 1] for c in colors]


def _strong_base(g: Graph, cancel) -> List[int]:
    if g.n == 5 and is_complete(g):
        return list(K5_BASE)
    try:
        _, coloring = clique_chromatic_number(
            g, strong=True, constraint=ColoringConstraint({}, 3), cancel=cancel
        )
    except Infeasible:
        raise InternalFault("planar piece has no strong 3-clique-coloring")
    return list(coloring.colors)


def _extend_in_component(g: Graph, corners, phi, cancel) -> List[int]:
    """
    extend_fixed_triangle on the component of the triangle, any strong
    3-coloring on the rest
    """
    component = next(c for c in connected_components(g) if corners[0] in c)
    sub, members = induced_subgraph(g, component)
    index = {v: i for i, v in enumerate(members)}
    local = extend_fixed_triangle(
        sub, [index[v] for v in corners], {index[v]: c for v, c in phi.items()}, cancel
    )
    colors = [0] * g.n
    for i, v in enumerate(members):
        colors[v] = local[i]
    rest = [v for v in range(g.n) if v not in index]
    if rest:
        others, rest_members = induced_subgraph(g, rest)
        for i, color in enumerate(_strong_base(others, cancel)):
            colors[rest_members[i]] = color
    return colors


def _contracted_corners(plus: Graph, p1, p2):
    """
    plus with p1p2 contracted, its image table, and the first edge among
    the neighbors of the merged vertex or None
    """
    contracted, image = contract_edge(plus, p1, p2)
    around = contracted.neighbor_set(image[p1])
    corners = next(
        ((a, b) for a, b in combinations(sorted(around), 2) if contracted.has_edge(a, b)),
        None,
    )
    return contracted, image, corners


def _pair_case(plus: Graph, p1, p2, c1, c2) -> str:
    if plus.n == 5 and is_complete(plus):
        return "glue-K5"
    if c1 != c2:
        if plus.neighbor_set(p1) & plus.neighbor_set(p2):
            return "glue-edge-distinct-triangle"
        return "glue-edge-distinct-maximal"
    if _contracted_corners(plus, p1, p2)[2] is None:
        return "glue-equal-contract-no-triangle"
    return "glue-equal-contract-triangle"


def _pair_colors(plus: Graph, p1, p2, c1, c2, cancel):
    """
    Coloring of a piece with its glued pair joined, giving p1 and p2
    their host colors. Returns colors, case label and renaming.
    """
    case = _pair_case(plus, p1, p2, c1, c2)
    if case == "glue-K5":
        others = [v for v in range(5) if v not in (p1, p2)]
        colors = [0] * 5
        colors[p1], colors[p2] = c1, c2
        if c1 != c2:
            for v, color in zip(others, COLORS):
                colors[v] = color
        else:
            low, high = [c for c in COLORS if c != c1]
            colors[others[0]] = colors[others[1]] = low
            colors[others[2]] = high
        return colors, case, None

    if case == "glue-edge-distinct-maximal":
        base = _strong_base(plus, cancel)
        permutation = _rename(base, {p1: c1, p2: c2})
        if permutation is None:
            raise InternalFault("maximal glued edge is monochromatic in its piece")
        return _apply(base, permutation), case, permutation
    if case == "glue-edge-distinct-triangle":
        w = min(plus.neighbor_set(p1) & plus.neighbor_set(p2))
        third = next(c for c in COLORS if c not in (c1, c2))
        colors = _extend_in_component(plus, (p1, p2, w), {p1: c1, p2: c2, w: third}, cancel)
        return colors, case, None

    contracted, image, corners = _contracted_corners(plus, p1, p2)
    merged = image[p1]
    if corners is None:
        try:
            _, coloring = clique_chromatic_number(
                contracted,
                strong=True,
                constraint=ColoringConstraint({merged: c1}, 3),
                cancel=cancel,
            )
        except Infeasible:
            raise InternalFault("contracted piece has no strong 3-clique-coloring")
        local = list(coloring.colors)
    else:
        a, b = corners
        low, high = [c for c in COLORS if c != c1]
        fixed = {merged: c1, a: low, b: high}
        # triangles p1 p2 w collapse to edges merged-w
        collapsed = [
            (merged, image[w]) for w in sorted(plus.neighbor_set(p1) & plus.neighbor_set(p2))
        ]
        found = solve_hyperedges(
            contracted.n,
            coloring_hyperedges(contracted, True) + collapsed,
            3,
            fixed,
            cancel,
        )
        if found is not None:
            local = list(found)
        else:
            local = _extend_in_component(contracted, (merged, a, b), fixed, cancel)
    return [local[image[x]] for x in range(plus.n)], case, None


def _piece_hyperedges(actual: Graph, fresh: Set[int]) -> List[Tuple[int, ...]]:
    """
    Maximal cliques and triangles of the piece through a vertex it adds
    """
    hyperedges = [
        c for c in maximal_cliques(actual) if len(c) >= 2 and fresh.intersection(c)
    ]
    known = set(hyperedges)
    hyperedges += [
        t for t in triangles(actual) if fresh.intersection(t) and t not in known
    ]
    return hyperedges


def _actual_piece(raw: Graph, remap: Sequence[int]) -> Graph:
    """
    The piece as it survives in the composed graph
    """
    return Graph(
        len(remap),
        [
            [y for y in range(len(remap)) if raw.has_edge(remap[x], remap[y])]
            for x in range(len(remap))
        ],
    )


def strong_three_color(
    seq: WagnerSequence, cancel: CancelToken = None
) -> Tuple[Coloring, ColoringTrace]:
    """
    Strong 3-clique-coloring of the graph a Wagner sequence composes to,
    built piece by piece in glue order. Pieces are taken as they appear
    in the final graph; a glued pair that is not an edge there is treated
    as nonadjacent and the piece is colored with the pair joined.
    """
    errors = validate(seq)
    if errors:
        raise WagnerError("; ".join(errors))
    raw, remaps = compose_raw(seq)
    phi = [0] * raw.n
    steps = []

    for index, (piece, glue) in enumerate(zip(seq.pieces, seq.glues)):
        remap = remaps[index]
        actual = _actual_piece(raw, remap)
        anchors = glue.piece
        permutation = None
        if glue.mode == DISJOINT:
            local = _strong_base(actual, cancel)
            if index == 0:
                case = "base-K5" if actual.n == 5 and is_complete(actual) else "base-planar"
            else:
                case = "glue-0sum"
        elif glue.mode == ONE_VERTEX:
            (p,), (h,) = anchors, glue.host
            base = _strong_base(actual, cancel)
            permutation = _rename(base, {p: phi[h]})
            local = _apply(base, permutation)
            case = "glue-1sum"
        else:
            p1, p2 = anchors
            h1, h2 = glue.host
            plus = actual if actual.has_edge(p1, p2) else add_edge(actual, p1, p2)
            case = _pair_case(plus, p1, p2, phi[h1], phi[h2])
            try:
                local, case, permutation = _pair_colors(
                    plus, p1, p2, phi[h1], phi[h2], cancel
                )
            except (InternalFault, PreconditionError) as e:
                logger.warning(f"piece {index}: {e}")
                local = None

        fresh = {x for x in range(actual.n) if x not in anchors}
        fixed = {p: phi[h] for p, h in zip(anchors, glue.host)}
        hyperedges = _piece_hyperedges(actual, fresh)
        fallback = False
        if local is None or any(local[p] != color for p, color in fixed.items()) or any(
            len({local[v] for v in e}) == 1 for e in hyperedges
        ):
            logger.warning(
                f"piece {index}: {case} coloring fails in the composed graph, "
                "searching the piece directly"
            )
            found = solve_hyperedges(actual.n, hyperedges, 3, fixed, cancel)
            if found is None:
                raise InternalFault(f"piece {index} admits no strong 3-clique-coloring")
            local = list(found)
            fallback = True

        for x, color in enumerate(local):
            phi[remap[x]] = color
        steps.append(TraceStep(index, case, permutation, fallback))

    final = [0] * raw.n
    labels = seq.labels if seq.labels is not None else range(raw.n)
    for v, color in enumerate(phi):
        final[labels[v]] = color
    coloring = Coloring(final)
    graph, _ = compose(seq)
    violation = verify_strong(graph, coloring)
    if violation is not None or coloring.k > 3:
        raise InternalFault(f"structural coloring is not a strong 3-coloring: {violation}")
    return coloring, ColoringTrace(tuple(steps))


def _has_stable_triple_with(g: Graph, x: int, t: int) -> bool:
    pool = sorted(g.neighbor_set(x) - g.neighbor_set(t))
    return any(not g.has_edge(r, s) for r, s in combinations(pool, 2))


def _singular_plans(g: Graph, singular: Sequence[int]):
    """
    Free choices of the construction in the order they are tried:
    the singular vertex x, its non-neighbor t lying in a stable set of
    size three, and which common neighbor of x and t takes color 2
    """
    for x in singular:
        for t in range(g.n):
            if t == x or g.has_edge(x, t) or not _has_stable_triple_with(g, x, t):
                continue
            common = sorted(g.neighbor_set(x) & g.neighbor_set(t))
            if len(common) >= 2:
                for chosen in common:
                    yield x, t, chosen
            else:
                yield x, t, None


def _singular_construction(g: Graph, x, t, chosen) -> List[int]:
    colors = [0] * g.n
    colors[x] = 1
    colors[t] = 2
    for u in range(g.n):
        if u in (x, t):
            continue
        if not g.has_edge(x, u):
            colors[u] = 1
        elif g.has_edge(t, u):
            colors[u] = 2 if u == chosen else 1
        else:
            colors[u] = 2
    return colors


def _singular_vertices(g: Graph) -> List[int]:
    return [
        v
        for v in range(g.n)
        if all(
            g.has_edge(a, b)
            for a, b in combinations(
                [u for u in range(g.n) if u != v and not g.has_edge(u, v)], 2
            )
        )
    ]


def two_color_singular(g: Graph, cancel: CancelToken = None) -> Coloring:
    """
    2-clique-coloring of a graph with no K3,3 minor, a singular vertex,
    and independence number at most 3
    """
    singular = _singular_vertices(g)
    if not singular:
        raise PreconditionError("graph has no singular vertex")
    if not is_k33_minor_free(g).verdict:
        raise PreconditionError("graph has a K3,3 minor")
    alpha, _ = independence_number(g)
    if alpha > 3:
        raise PreconditionError(f"independence number {alpha} exceeds 3")

    if alpha <= 1:
        if g.n <= 1:
            return Coloring([1] * g.n)
        return Coloring([2] + [1] * (g.n - 1))
    if alpha == 2:
        try:
            _, coloring = clique_chromatic_number(
                g, constraint=ColoringConstraint({}, 2), cancel=cancel
            )
        except Infeasible:
            raise ConstructionFailed("graph with independence number 2 is not 2-clique-colorable")
        return coloring

    tried = 0
    for x, t, chosen in _singular_plans(g, singular):
        tried += 1
        coloring = Coloring(_singular_construction(g, x, t, chosen))
        if verify_clique_coloring(g, coloring) is None:
            logger.debug(f"singular construction x={x} t={t} chosen={chosen}")
            return coloring
    if not tried:
        raise PreconditionError(
            "no stable set of size three avoids a singular vertex"
        )
    raise ConstructionFailed(f"none of {tried} construction choices is a 2-clique-coloring")


def two_color_claw_free(g: Graph, cancel: CancelToken = None) -> Coloring:
    """
    2-clique-coloring of a claw-free graph with no K3,3 minor. Odd
    cycles of order above three have no such coloring.
    """
    if not is_claw_free(g).verdict:
        raise PreconditionError("graph is not claw-free")
    if not is_k33_minor_free(g).verdict:
        raise PreconditionError("graph has a K3,3 minor")
    for component in connected_components(g):
        sub, _ = induced_subgraph(g, component)
        if sub.n > 3 and is_odd_cycle(sub).verdict:
            raise OddCycleException(sub.n)

    if find_singular_vertex(g).verdict and independence_number(g)[0] <= 3:
        try:
            return two_color_singular(g, cancel)
        except (ConstructionFailed, PreconditionError) as e:
            logger.warning(f"singular construction unavailable ({e}), searching instead")

    try:
        _, coloring = clique_chromatic_number(
            g, constraint=ColoringConstraint({}, 2), cancel=cancel
        )
    except Infeasible:
        raise InternalFault("claw-free graph with no K3,3 minor is not 2-clique-colorable")
    return coloring


def singular_corpus(
    seed: int, count: int, size_range: Tuple[int, int] = (5, 11), max_tries: int = None
) -> List[Graph]:
    """
    Induced subgraphs of the singular host that keep no K3,3 minor, a singular
    vertex and independence number 3; distinct up to labels
    """
    from clique_colorer.fixtures import singular_host
    from clique_colorer.graph6 import encode_graph6

    host, extra = singular_host()
    rng = np.random.default_rng(seed)
    others = [v for v in range(host.n) if v != extra]
    low, high = size_range
    tries = max_tries if max_tries is not None else count * 200
    found: Dict[str, Graph] = {}
    for _ in range(tries):
        if len(found) >= count:
            break
        size = int(rng.integers(low, high + 1))
        chosen = [extra] + [int(v) for v in rng.choice(others, size - 1, replace=False)]
        g, _ = induced_subgraph(host, chosen)
        key = encode_graph6(g)
        if key in found:
            continue
        if not find_singular_vertex(g).verdict or independence_number(g)[0] != 3:
            continue
        if not is_k33_minor_free(g).verdict:
            continue
        found[key] = g
    logger.debug(f"singular corpus: {len(found)} graphs from seed {seed}")
    return list(found.values())
