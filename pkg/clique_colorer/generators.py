import networkx as nx

from clique_colorer.graph import Graph, empty_graph


def complete_graph(n):
    return Graph.from_networkx(nx.complete_graph(n))


def cycle_graph(n):
    return Graph.from_networkx(nx.cycle_graph(n))


def path_graph(n):
    return Graph.from_networkx(nx.path_graph(n))


def complete_bipartite_graph(a, b):
    """
    Side one is 0..a-1, side two is a..a+b-1
    """
    return Graph.from_networkx(nx.complete_bipartite_graph(a, b))


def star_graph(leaves):
    """
    Center 0 joined to leaves 1..leaves; star_graph(3) is the claw
    """
    return Graph.from_networkx(nx.star_graph(leaves))


def wheel_graph(rim):
    """
    Hub 0 joined to a cycle 1..rim
    """
    return Graph.from_networkx(nx.wheel_graph(rim + 1))


def prism_graph():
    """
    Triangles {0,1,2} and {3,4,5} joined by the matching 0-3, 1-4, 2-5
    """
    return Graph.from_networkx(nx.circular_ladder_graph(3))


def petersen_graph():
    return Graph.from_networkx(nx.petersen_graph())


def icosahedron():
    return Graph.from_networkx(nx.icosahedral_graph())


__all__ = [
    "complete_graph",
    "complete_bipartite_graph",
    "cycle_graph",
    "empty_graph",
    "icosahedron",
    "path_graph",
    "petersen_graph",
    "prism_graph",
    "star_graph",
    "wheel_graph",
]
