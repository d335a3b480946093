"""
Wagner sequences: graphs built from planar pieces and copies of K5 by
gluing each new piece onto what was built so far along nothing, a
vertex, or a pair of vertices. These are exactly the graphs with no
K3,3 minor.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from clique_colorer import settings
from clique_colorer.exceptions import SizeLimitExceeded, WagnerError
from clique_colorer.generators import complete_graph
from clique_colorer.graph import (
    Graph,
    VertexSet,
    connected_components,
    cut_vertices_and_blocks,
    from_edge_list,
    induced_subgraph,
    is_complete,
    relabel,
)
from clique_colorer.graph6 import encode_graph6, parse_graph6
from clique_colorer.logging import logger

PLANAR = "planar"
K5_PIECE = "K5"

DISJOINT = "disjoint"
ONE_VERTEX = "vertex"
EDGE = "edge"
NONADJACENT = "nonadjacent"
GLUE_MODES = (DISJOINT, ONE_VERTEX, EDGE, NONADJACENT)
ANCHOR_COUNT = {DISJOINT: 0, ONE_VERTEX: 1, EDGE: 2, NONADJACENT: 2}

DEFAULT_MODE_WEIGHTS = {
    "planar": 4.0,
    "k5": 1.0,
    "disjoint": 1.0,
    "vertex": 2.0,
    "edge": 3.0,
    "nonadjacent": 2.0,
}
ANCHOR_TRIES = 64


def _planar(g: Graph) -> bool:
    return nx.check_planarity(g.to_networkx())[0]


def _is_k5(g: Graph) -> bool:
    return g.n == 5 and is_complete(g)


@dataclass(frozen=True)
class WagnerPiece:
    kind: str
    graph: Optional[Graph] = None

    @classmethod
    def planar(cls, graph: Graph) -> "WagnerPiece":
        return cls(PLANAR, graph)

    @classmethod
    def k5(cls) -> "WagnerPiece":
        return cls(K5_PIECE)

    def as_graph(self) -> Graph:
        return complete_graph(5) if self.kind == K5_PIECE else self.graph

    def to_json(self):
        if self.kind == K5_PIECE:
            return {"kind": K5_PIECE}
        return {"kind": PLANAR, "graph6": encode_graph6(self.graph)}

    @classmethod
    def from_json(cls, payload) -> "WagnerPiece":
        if payload.get("kind") == K5_PIECE:
            return cls.k5()
        if payload.get("kind") == PLANAR:
            return cls.planar(parse_graph6(payload["graph6"]))
        raise WagnerError(f"unknown piece kind {payload.get('kind')!r}")


@dataclass(frozen=True)
class GlueSpec:
    """
    How a piece attaches to the graph composed so far: anchors name the
    host vertices and the matching piece vertices. keep_edge only
    applies to edge glues.
    """

    mode: str
    host: Tuple[int, ...] = ()
    piece: Tuple[int, ...] = ()
    keep_edge: bool = True

    @classmethod
    def disjoint(cls) -> "GlueSpec":
        return cls(DISJOINT)

    @classmethod
    def one_vertex(cls, host: int, piece: int) -> "GlueSpec":
        return cls(ONE_VERTEX, (host,), (piece,))

    @classmethod
    def edge(cls, host, piece, keep_edge=True) -> "GlueSpec":
        return cls(EDGE, tuple(host), tuple(piece), keep_edge)

    @classmethod
    def nonadjacent(cls, host, piece) -> "GlueSpec":
        return cls(NONADJACENT, tuple(host), tuple(piece))

    def to_json(self):
        payload = {"mode": self.mode}
        if self.mode != DISJOINT:
            payload["anchors"] = {"host": list(self.host), "piece": list(self.piece)}
        if self.mode == EDGE:
            payload["keep_edge"] = self.keep_edge
        return payload

    @classmethod
    def from_json(cls, payload) -> "GlueSpec":
        mode = payload.get("mode")
        if mode not in GLUE_MODES:
            raise WagnerError(f"unknown glue mode {mode!r}")
        anchors = payload.get("anchors", {})
        return cls(
            mode,
            tuple(anchors.get("host", ())),
            tuple(anchors.get("piece", ())),
            bool(payload.get("keep_edge", True)),
        )


@dataclass(frozen=True)
class WagnerSequence:
    pieces: Tuple[WagnerPiece, ...]
    glues: Tuple[GlueSpec, ...]
    # composed id -> final vertex id; None keeps composition order
    labels: Optional[Tuple[int, ...]] = None

    def to_json(self):
        payload = {
            "pieces": [piece.to_json() for piece in self.pieces],
            "glues": [glue.to_json() for glue in self.glues],
        }
        if self.labels is not None:
            payload["labels"] = list(self.labels)
        return payload

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, payload) -> "WagnerSequence":
        try:
            pieces = tuple(WagnerPiece.from_json(p) for p in payload["pieces"])
            glues = tuple(GlueSpec.from_json(g) for g in payload["glues"])
        except (KeyError, TypeError, AttributeError) as e:
            raise WagnerError(f"malformed sequence: {e}")
        labels = payload.get("labels")
        return cls(pieces, glues, tuple(labels) if labels is not None else None)

    @classmethod
    def loads(cls, text: str) -> "WagnerSequence":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise WagnerError(f"sequence is not valid JSON: {e}")
        return cls.from_json(payload)


@dataclass(frozen=True)
class NotK33MinorFree:
    """
    A 3-connected piece of the decomposition that is neither planar nor
    K5, which certifies a K3,3 minor
    """

    vertices: VertexSet
    graph: Graph
    virtual_edges: Tuple[Tuple[int, int], ...]

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "graph6": encode_graph6(self.graph),
            "virtual_edges": [list(e) for e in self.virtual_edges],
        }


class _Composer:
    """
    Applies glues one at a time; tracks adjacency, the image of every
    piece placed so far and the anchor pairs of nonadjacent glues each
    piece carries
    """

    def __init__(self):
        self.adj: List[set] = []
        self.remaps: List[Tuple[int, ...]] = []
        self.piece_graphs: List[Graph] = []
        # per piece: local pairs joined by a virtual edge
        self.virtual: List[set] = []

    def pair_owner(self, host: Sequence[int]) -> Optional[int]:
        """
        First piece holding both host vertices that stays planar with the
        pair joined on top of the pairs it already carries
        """
        h1, h2 = host
        for i, (remap, pg) in enumerate(zip(self.remaps, self.piece_graphs)):
            if h1 not in remap or h2 not in remap:
                continue
            pair = tuple(sorted((remap.index(h1), remap.index(h2))))
            if pg.has_edge(*pair) or pair in self.virtual[i]:
                return i
            if _planar(_with_edges(pg, self.virtual[i] | {pair})):
                return i
        return None

    @property
    def n(self):
        return len(self.adj)

    def _check_pair(self, index, glue, pg):
        h1, h2 = glue.host
        p1, p2 = glue.piece
        if h1 == h2 or p1 == p2:
            raise WagnerError("glue anchors must be two distinct vertices", index)
        for h in glue.host:
            if not 0 <= h < self.n:
                raise WagnerError(f"host anchor {h} out of range", index)
        for p in glue.piece:
            if not 0 <= p < pg.n:
                raise WagnerError(f"piece anchor {p} out of range", index)
        host_adjacent = h2 in self.adj[h1]
        piece_adjacent = pg.has_edge(p1, p2)
        if glue.mode == EDGE and not (host_adjacent and piece_adjacent):
            raise WagnerError("edge glue anchors are not an edge on both sides", index)
        if glue.mode == NONADJACENT and (host_adjacent or piece_adjacent):
            raise WagnerError("nonadjacent glue anchors are adjacent", index)

    def glue(self, index: int, piece: WagnerPiece, glue: GlueSpec) -> Tuple[int, ...]:
        pg = piece.as_graph()
        if len(glue.host) != ANCHOR_COUNT.get(glue.mode, -1) or len(
            glue.piece
        ) != len(glue.host):
            raise WagnerError(f"wrong anchors for a {glue.mode} glue", index)
        mapping: List[Optional[int]] = [None] * pg.n
        if glue.mode == ONE_VERTEX:
            (h,), (p,) = glue.host, glue.piece
            if not 0 <= h < self.n:
                raise WagnerError(f"host anchor {h} out of range", index)
            if not 0 <= p < pg.n:
                raise WagnerError(f"piece anchor {p} out of range", index)
            mapping[p] = h
        elif glue.mode in (EDGE, NONADJACENT):
            self._check_pair(index, glue, pg)
            for h, p in zip(glue.host, glue.piece):
                mapping[p] = h
        carried = set()
        if glue.mode == NONADJACENT:
            owner = self.pair_owner(glue.host)
            if owner is not None:
                remap = self.remaps[owner]
                pair = tuple(sorted(remap.index(h) for h in glue.host))
                if not self.piece_graphs[owner].has_edge(*pair):
                    self.virtual[owner].add(pair)
            carried.add(tuple(sorted(glue.piece)))
        for x in range(pg.n):
            if mapping[x] is None:
                mapping[x] = self.n
                self.adj.append(set())
        for a, b in pg.edges():
            self.adj[mapping[a]].add(mapping[b])
            self.adj[mapping[b]].add(mapping[a])
        if glue.mode == EDGE and not glue.keep_edge:
            h1, h2 = glue.host
            self.adj[h1].discard(h2)
            self.adj[h2].discard(h1)
        remap = tuple(mapping)
        self.remaps.append(remap)
        self.piece_graphs.append(pg)
        self.virtual.append(carried)
        return remap

    def graph(self) -> Graph:
        return Graph(self.n, self.adj)


def compose_raw(seq: WagnerSequence) -> Tuple[Graph, List[Tuple[int, ...]]]:
    """
    Composition in glue order, before labels are applied
    """
    if not seq.pieces:
        raise WagnerError("sequence has no pieces")
    if len(seq.glues) != len(seq.pieces):
        raise WagnerError(
            f"{len(seq.pieces)} pieces but {len(seq.glues)} glue specifications"
        )
    if seq.glues[0].mode != DISJOINT:
        raise WagnerError("the first piece must use a disjoint glue", 0)
    composer = _Composer()
    for index, (piece, glue) in enumerate(zip(seq.pieces, seq.glues)):
        composer.glue(index, piece, glue)
    return composer.graph(), composer.remaps


def compose(seq: WagnerSequence) -> Tuple[Graph, List[Tuple[int, ...]]]:
    """
    Builds the graph of a sequence. Returns it with one remap per piece:
    piece vertex x became vertex remaps[i][x].
    """
    raw, remaps = compose_raw(seq)
    if seq.labels is None:
        return raw, remaps
    if sorted(seq.labels) != list(range(raw.n)):
        raise WagnerError("labels are not a permutation of the composed vertices")
    labels = seq.labels
    return (
        relabel(raw, labels),
        [tuple(labels[v] for v in remap) for remap in remaps],
    )


def _with_edges(g: Graph, pairs) -> Graph:
    adj = [set(a) for a in g.adj]
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(g.n, adj)


def validate(seq: WagnerSequence) -> List[str]:
    """
    Every problem that keeps seq from denoting a K3,3-minor-free graph;
    an empty list means the sequence is valid
    """
    if not seq.pieces:
        return ["empty"]
    errors = []
    if len(seq.glues) != len(seq.pieces):
        errors.append(
            f"{len(seq.pieces)} pieces but {len(seq.glues)} glue specifications"
        )
        return errors
    for index, piece in enumerate(seq.pieces):
        if piece.kind == K5_PIECE:
            if piece.graph is not None:
                errors.append(f"piece {index}: K5 piece carries a graph")
        elif piece.kind == PLANAR:
            if piece.graph is None:
                errors.append(f"piece {index}: planar piece has no graph")
            elif not _planar(piece.graph):
                errors.append(f"piece {index} not planar")
        else:
            errors.append(f"piece {index}: unknown kind {piece.kind!r}")
    if errors:
        return errors
    if seq.glues[0].mode != DISJOINT:
        errors.append("piece 0: the first piece must use a disjoint glue")
        return errors

    composer = _Composer()
    for index, (piece, glue) in enumerate(zip(seq.pieces, seq.glues)):
        if glue.mode == NONADJACENT and len(glue.host) == 2:
            if composer.pair_owner(glue.host) is None:
                errors.append(
                    f"piece {index}: nonadjacent anchors do not lie in one earlier "
                    "piece that stays planar with them and its other glued pairs "
                    "joined"
                )
            pg = piece.as_graph()
            p1, p2 = glue.piece
            if 0 <= p1 < pg.n and 0 <= p2 < pg.n and p1 != p2:
                if _is_k5(pg) or not _planar(_with_edges(pg, [(p1, p2)])):
                    errors.append(
                        f"piece {index}: piece is not planar with its anchors joined"
                    )
        try:
            composer.glue(index, piece, glue)
        except WagnerError as e:
            errors.append(str(e))
            return errors

    if seq.labels is not None and sorted(seq.labels) != list(range(composer.n)):
        errors.append("labels are not a permutation of the composed vertices")
    return errors


def _random_planar(rng: np.random.Generator, size: int, delete_p: float) -> Graph:
    """
    Stacked triangulation on size vertices, each edge then deleted with
    probability delete_p, vertices shuffled
    """
    if size <= 3:
        edges = list(combinations(range(size), 2))
    else:
        edges = [(0, 1), (1, 2), (0, 2)]
        faces = [(0, 1, 2)]
        for v in range(3, size):
            a, b, c = faces.pop(int(rng.integers(len(faces))))
            edges += [(a, v), (b, v), (c, v)]
            faces += [(a, b, v), (b, c, v), (a, c, v)]
    kept = [e for e in edges if rng.random() >= delete_p]
    order = [int(x) for x in rng.permutation(size)]
    return from_edge_list(size, [(order[a], order[b]) for a, b in kept])


def _pick(rng, items):
    return items[int(rng.integers(len(items)))]


def _draw_nonadjacent_anchors(rng, composer, pg):
    host_pairs = [
        (a, b)
        for a, b in combinations(range(composer.n), 2)
        if b not in composer.adj[a]
    ]
    piece_pairs = [
        (a, b)
        for a, b in combinations(range(pg.n), 2)
        if not pg.has_edge(a, b)
    ]
    if not host_pairs or not piece_pairs:
        return None
    host = piece = None
    for _ in range(ANCHOR_TRIES):
        pair = _pick(rng, host_pairs)
        if composer.pair_owner(pair) is not None:
            host = pair
            break
    for _ in range(ANCHOR_TRIES):
        pair = _pick(rng, piece_pairs)
        if _planar(_with_edges(pg, [pair])):
            piece = pair
            break
    if host is None or piece is None:
        return None
    return GlueSpec.nonadjacent(host, piece)


def _draw_glue(rng, mode, composer, pg) -> Optional[GlueSpec]:
    if mode == DISJOINT:
        return GlueSpec.disjoint()
    if mode == ONE_VERTEX:
        if composer.n == 0 or pg.n == 0:
            return None
        return GlueSpec.one_vertex(
            int(rng.integers(composer.n)), int(rng.integers(pg.n))
        )
    if mode == EDGE:
        host_edges = composer.graph().edges()
        piece_edges = pg.edges()
        if not host_edges or not piece_edges:
            return None
        host = _pick(rng, host_edges)
        piece = _pick(rng, piece_edges)
        if rng.random() < 0.5:
            piece = piece[::-1]
        return GlueSpec.edge(host, piece, keep_edge=bool(rng.random() < 0.5))
    return _draw_nonadjacent_anchors(rng, composer, pg)


def random_sequence(
    seed: int,
    piece_count: int,
    planar_size_range: Tuple[int, int] = (3, 12),
    mode_weights: Dict[str, float] = None,
    delete_p: float = 0.25,
) -> WagnerSequence:
    """
    Reproducible random valid sequence. Piece kinds are drawn by the
    planar/k5 weights, glue modes by the remaining weights; a mode with
    no valid anchors is redrawn among the others.
    """
    if piece_count < 1:
        raise WagnerError("a sequence needs at least one piece")
    low, high = planar_size_range
    if not 1 <= low <= high:
        raise WagnerError(f"bad planar size range {planar_size_range}")
    weights = {**DEFAULT_MODE_WEIGHTS, **(mode_weights or {})}
    rng = np.random.default_rng(seed)
    kind_total = weights["planar"] + weights["k5"]
    if kind_total <= 0:
        raise WagnerError("piece kind weights must not both be zero")

    pieces, glues = [], []
    composer = _Composer()
    for index in range(piece_count):
        if rng.random() < weights["k5"] / kind_total:
            piece = WagnerPiece.k5()
        else:
            size = int(rng.integers(low, high + 1))
            piece = WagnerPiece.planar(_random_planar(rng, size, delete_p))
        pg = piece.as_graph()

        glue = GlueSpec.disjoint() if index == 0 else None
        modes = [m for m in (DISJOINT, ONE_VERTEX, EDGE, NONADJACENT) if weights[m] > 0]
        while glue is None and modes:
            p = np.array([weights[m] for m in modes], dtype=float)
            mode = modes[int(rng.choice(len(modes), p=p / p.sum()))]
            glue = _draw_glue(rng, mode, composer, pg)
            if glue is None:
                modes.remove(mode)
        if glue is None:
            glue = GlueSpec.disjoint()

        composer.glue(index, piece, glue)
        pieces.append(piece)
        glues.append(glue)
    logger.debug(f"random sequence seed={seed}: {composer.n} vertices")
    return WagnerSequence(tuple(pieces), tuple(glues))


class _Part:
    """
    A piece under construction. edges maps a vertex pair to the set of
    virtual-edge tags (link id, side) it carries and whether it is real.
    """

    def __init__(self, vertices, edges):
        self.vertices = tuple(sorted(vertices))
        self.edges: Dict[frozenset, Tuple[bool, set]] = edges

    def local(self) -> Tuple[Graph, Dict[int, int]]:
        index = {v: i for i, v in enumerate(self.vertices)}
        g = from_edge_list(
            len(self.vertices), [tuple(index[v] for v in pair) for pair in self.edges]
        )
        return g, index


class _NotDecomposable(Exception):
    def __init__(self, part):
        super().__init__()
        self.part = part


def _two_separation(g: Graph) -> Optional[Tuple[int, int, List[int]]]:
    """
    First pair x < y whose removal disconnects g, with the component of
    g - {x, y} holding its smallest remaining vertex
    """
    for x, y in combinations(range(g.n), 2):
        rest = [v for v in range(g.n) if v not in (x, y)]
        sub, members = induced_subgraph(g, rest)
        components = connected_components(sub)
        if len(components) >= 2:
            return x, y, [members[v] for v in components[0]]
    return None


class _Splitter:
    def __init__(self):
        self.links: Dict[int, Tuple[int, int]] = {}

    def split(self, part: _Part) -> List[_Part]:
        g, _ = part.local()
        if _is_k5(g) or _planar(g):
            return [part]
        found = _two_separation(g)
        if found is None:
            raise _NotDecomposable(part)
        x, y, first = found
        gx, gy = part.vertices[x], part.vertices[y]
        side1 = {part.vertices[v] for v in first} | {gx, gy}
        side2 = (set(part.vertices) - side1) | {gx, gy}
        link = len(self.links)
        self.links[link] = (gx, gy)
        pair = frozenset((gx, gy))
        edges1, edges2 = {}, {}
        for e, (real, tags) in part.edges.items():
            if e == pair or not e <= side1:
                edges2[e] = (real, set(tags))
            else:
                edges1[e] = (real, set(tags))
        edges1[pair] = (False, {(link, 1)})
        real, tags = edges2.get(pair, (False, set()))
        edges2[pair] = (real, tags | {(link, 2)})
        return self.split(_Part(side1, edges1)) + self.split(_Part(side2, edges2))


def _block_order(blocks: List[VertexSet]) -> List[Tuple[VertexSet, Optional[int]]]:
    """
    Blocks of one component, each after a block it shares a cut vertex
    with, paired with that vertex
    """
    order = [(blocks[0], None)]
    covered = set(blocks[0])
    remaining = list(blocks[1:])
    while remaining:
        for i, block in enumerate(remaining):
            shared = covered.intersection(block)
            if shared:
                order.append((block, min(shared)))
                covered.update(block)
                del remaining[i]
                break
        else:
            raise WagnerError("blocks of a component do not form a tree")
    return order


class _Emitter:
    def __init__(self):
        self.pieces: List[WagnerPiece] = []
        self.glues: List[GlueSpec] = []
        self.labels: List[int] = []
        self.composed: Dict[int, int] = {}
        self.pair_of_glue: Dict[int, frozenset] = {}

    def emit(self, part: _Part, glue_mode: str, anchors: Sequence[int]):
        g, index = part.local()
        piece = WagnerPiece.k5() if _is_k5(g) else WagnerPiece.planar(g)
        if glue_mode == DISJOINT:
            glue = GlueSpec.disjoint()
        elif glue_mode == ONE_VERTEX:
            (v,) = anchors
            glue = GlueSpec.one_vertex(self.composed[v], index[v])
        else:
            x, y = anchors
            glue = GlueSpec.edge(
                (self.composed[x], self.composed[y]), (index[x], index[y])
            )
            self.pair_of_glue[len(self.glues)] = frozenset((x, y))
        for v in part.vertices:
            if v not in anchors:
                self.composed[v] = len(self.labels)
                self.labels.append(v)
        self.pieces.append(piece)
        self.glues.append(glue)

    def emit_block(self, leaves: List[_Part], links, attach: Optional[int]):
        owners: Dict[int, List[int]] = {}
        for i, leaf in enumerate(leaves):
            for e, (_, tags) in leaf.edges.items():
                for link, _ in tags:
                    owners.setdefault(link, []).append(i)
        root = 0
        if attach is not None:
            root = next(i for i, leaf in enumerate(leaves) if attach in leaf.vertices)
        if attach is None:
            self.emit(leaves[root], DISJOINT, ())
        else:
            self.emit(leaves[root], ONE_VERTEX, (attach,))
        placed = {root}
        queue = [root]
        for i in queue:
            touching = sorted(
                link
                for link, holders in owners.items()
                if i in holders
            )
            for link in touching:
                for j in owners[link]:
                    if j in placed:
                        continue
                    placed.add(j)
                    queue.append(j)
                    self.emit(leaves[j], EDGE, links[link])

    def finish(self, g: Graph) -> WagnerSequence:
        last_glue: Dict[frozenset, int] = {}
        for glue_index, pair in self.pair_of_glue.items():
            last_glue[pair] = max(glue_index, last_glue.get(pair, -1))
        glues = list(self.glues)
        for glue_index, pair in self.pair_of_glue.items():
            x, y = tuple(pair)
            if not g.has_edge(x, y) and last_glue[pair] == glue_index:
                glue = glues[glue_index]
                glues[glue_index] = GlueSpec.edge(glue.host, glue.piece, keep_edge=False)
        return WagnerSequence(tuple(self.pieces), tuple(glues), tuple(self.labels))


def decompose(
    g: Graph, size_limit: int = None
) -> Union[WagnerSequence, NotK33MinorFree]:
    """
    Wagner sequence composing exactly to g, or the piece that shows g
    has a K3,3 minor. Components glue disjointly, blocks at their cut
    vertices, and 2-separations of non-planar blocks along virtual edges.
    """
    limit = settings.DECOMPOSE_SIZE_LIMIT if size_limit is None else size_limit
    if g.n > limit:
        raise SizeLimitExceeded(g.n, limit, "decomposition")
    if g.n == 0:
        return WagnerSequence(
            (WagnerPiece.planar(g),), (GlueSpec.disjoint(),), ()
        )

    emitter = _Emitter()
    for component in connected_components(g):
        sub, members = induced_subgraph(g, component)
        _, blocks = cut_vertices_and_blocks(sub)
        blocks = [tuple(members[v] for v in block) for block in blocks]
        for block, attach in _block_order(blocks):
            edges = {
                frozenset((a, b)): (True, set())
                for a, b in combinations(block, 2)
                if g.has_edge(a, b)
            }
            splitter = _Splitter()
            try:
                leaves = splitter.split(_Part(block, edges))
            except _NotDecomposable as e:
                graph, index = e.part.local()
                virtual = sorted(
                    tuple(sorted(index[v] for v in pair))
                    for pair, (real, _) in e.part.edges.items()
                    if not real
                )
                logger.debug(f"3-connected non-planar piece on {list(e.part.vertices)}")
                return NotK33MinorFree(e.part.vertices, graph, tuple(virtual))
            emitter.emit_block(leaves, splitter.links, attach)
    return emitter.finish(g)
