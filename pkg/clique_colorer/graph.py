from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

import networkx as nx

from clique_colorer.exceptions import ColoringError, GraphError

VertexSet = Tuple[int, ...]
Edge = Tuple[int, int]


class Graph:
    """
    Simple undirected graph on vertices 0..n-1.
    Neighbor lists are kept sorted; every iteration order is ascending id.
    Instances are immutable.
    """

    __slots__ = ("n", "adj", "edge_count", "_nbrs")

    def __init__(self, n: int, adj: Iterable[Iterable[int]]):
        adj = tuple(tuple(sorted(set(a))) for a in adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} neighbor lists, got {len(adj)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_nbrs", tuple(frozenset(a) for a in adj))
        object.__setattr__(self, "edge_count", sum(len(a) for a in adj) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def neighbor_set(self, v: int) -> frozenset:
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edges(self) -> List[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        index = {node: i for i, node in enumerate(sorted(graph.nodes()))}
        adj = [[] for _ in index]
        for a, b in graph.edges():
            if a == b:
                raise GraphError(f"self-loop at {a}")
            adj[index[a]].append(index[b])
            adj[index[b]].append(index[a])
        return cls(len(index), adj)


def check_vertex_set(g: Graph, s: Iterable[int]) -> VertexSet:
    members = tuple(s)
    if len(set(members)) != len(members):
        raise GraphError(f"duplicate vertex in {list(members)}")
    for v in members:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    return tuple(sorted(members))


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def empty_graph(n: int) -> Graph:
    return Graph(n, [() for _ in range(n)])


def induced_subgraph(g: Graph, s: Iterable[int]) -> Tuple[Graph, VertexSet]:
    """
    Returns the subgraph induced by s and the member table:
    vertex i of the subgraph is vertex members[i] of g
    """
    members = check_vertex_set(g, s)
    index = {v: i for i, v in enumerate(members)}
    adj = [[index[w] for w in g.adj[v] if w in index] for v in members]
    return Graph(len(members), adj), members


def delete_vertices(g: Graph, s: Iterable[int]) -> Tuple[Graph, VertexSet]:
    removed = set(check_vertex_set(g, s))
    return induced_subgraph(g, [v for v in range(g.n) if v not in removed])


def contract_edge(g: Graph, u: int, v: int) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Contracts the edge uv. Returns the contracted graph and the image
    table: vertex x of g becomes vertex image[x]. The merged vertex
    takes id min(u, v); ids above max(u, v) shift down by one.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    keep, drop = min(u, v), max(u, v)
    image = tuple(keep if x == drop else (x if x < drop else x - 1) for x in range(g.n))
    adj = [set() for _ in range(g.n - 1)]
    for a, b in g.edges():
        ia, ib = image[a], image[b]
        if ia != ib:
            adj[ia].add(ib)
            adj[ib].add(ia)
    return Graph(g.n - 1, adj), image


def complement(g: Graph) -> Graph:
    everyone = set(range(g.n))
    return Graph(g.n, [everyone - g.neighbor_set(v) - {v} for v in range(g.n)])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"self-loop at {u}")
    adj = [set(a) for a in g.adj]
    adj[u].add(v)
    adj[v].add(u)
    return Graph(g.n, adj)


def relabel(g: Graph, labels: Sequence[int]) -> Graph:
    """
    Vertex i of g becomes vertex labels[i]; labels must be a permutation
    """
    if sorted(labels) != list(range(g.n)):
        raise GraphError("labels are not a permutation of the vertex ids")
    adj = [None] * g.n
    for v in range(g.n):
        adj[labels[v]] = [labels[w] for w in g.adj[v]]
    return Graph(g.n, adj)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, list(g.adj) + [[w + g.n for w in a] for a in h.adj])


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def connected_components(g: Graph) -> List[VertexSet]:
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        for v in queue:
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        components.append(tuple(sorted(queue)))
    return components


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def cut_vertices_and_blocks(g: Graph) -> Tuple[List[int], List[VertexSet]]:
    """
    Block-cut decomposition by iterative DFS with an edge stack.
    Isolated vertices are reported as single-vertex blocks.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    blocks = []
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not g.adj[root]:
            blocks.append((root,))
            continue
        root_children = 0
        edge_stack = []
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            u, parent, neighbors = stack[-1]
            descended = False
            for w in neighbors:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(g.adj[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                if p != root:
                    cuts.add(p)
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (p, u):
                        break
                blocks.append(tuple(sorted(block)))
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts), sorted(blocks)


def line_graph(g: Graph) -> Tuple[Graph, List[Edge]]:
    """
    Line graph of g. Vertex i of the result is edges[i] of g
    """
    edges = g.edges()
    incident = [[] for _ in range(g.n)]
    for i, (a, b) in enumerate(edges):
        incident[a].append(i)
        incident[b].append(i)
    adj = [set() for _ in edges]
    for around in incident:
        for i in around:
            adj[i].update(j for j in around if j != i)
    return Graph(len(edges), adj), edges


class Coloring:
    """
    Vertex coloring with colors 1..k, where k is the largest color present
    """

    __slots__ = ("colors",)

    def __init__(self, colors: Iterable[int]):
        colors = tuple(colors)
        for v, color in enumerate(colors):
            if not isinstance(color, int) or isinstance(color, bool) or color < 1:
                raise ColoringError(f"vertex {v} has invalid color {color!r}")
        object.__setattr__(self, "colors", colors)

    def __setattr__(self, name, value):
        raise AttributeError("Coloring is immutable")

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.colors == other.colors

    def __hash__(self):
        return hash(self.colors)

    def __repr__(self):
        return f"Coloring({list(self.colors)})"

    def __reduce__(self):
        return (Coloring, (self.colors,))

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]

    @property
    def k(self) -> int:
        # the empty coloring counts as using one color
        return max(self.colors, default=1)

    def to_json(self) -> List[int]:
        return list(self.colors)
