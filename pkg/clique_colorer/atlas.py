"""
Every graph on n vertices up to isomorphism, grown one vertex at a time.
"""
from typing import Dict, Iterator, List

import networkx as nx

from clique_colorer.cancellation import CancelToken, check
from clique_colorer.graph import Graph, is_connected
from clique_colorer.graph6 import encode_graph6
from clique_colorer.logging import logger

_LEVELS: Dict[int, List[Graph]] = {}


def _invariant(graph: nx.Graph) -> str:
    degrees = ",".join(str(d) for d in sorted(d for _, d in graph.degree()))
    return f"{degrees}|{nx.weisfeiler_lehman_graph_hash(graph, iterations=3)}"


def _extend(g: Graph, mask: int) -> Graph:
    new = g.n
    attached = [v for v in range(g.n) if mask >> v & 1]
    adj = [list(a) + ([new] if v in attached else []) for v, a in enumerate(g.adj)]
    adj.append(attached)
    return Graph(g.n + 1, adj)


def graphs_of_order(n: int, cancel: CancelToken = None) -> List[Graph]:
    """
    One representative per isomorphism class, sorted by graph6 text
    """
    if n < 0:
        raise ValueError(f"negative order {n}")
    if n in _LEVELS:
        return _LEVELS[n]
    if n == 0:
        level = [Graph(0, [])]
    else:
        buckets: Dict[str, List[nx.Graph]] = {}
        level = []
        for parent in graphs_of_order(n - 1, cancel):
            for mask in range(1 << parent.n):
                check(cancel)
                child = _extend(parent, mask)
                graph = child.to_networkx()
                bucket = buckets.setdefault(_invariant(graph), [])
                if any(nx.is_isomorphic(graph, other) for other in bucket):
                    continue
                bucket.append(graph)
                level.append(child)
        level.sort(key=encode_graph6)
    logger.debug(f"{len(level)} graphs of order {n}")
    _LEVELS[n] = level
    return level


def enumerate_graphs(
    n_min: int, n_max: int, connected_only: bool = True, cancel: CancelToken = None
) -> Iterator[Graph]:
    for n in range(max(n_min, 0), n_max + 1):
        for g in graphs_of_order(n, cancel):
            if not connected_only or is_connected(g):
                yield g
