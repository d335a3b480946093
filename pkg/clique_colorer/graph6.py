import os
from typing import Iterator, List

from clique_colorer.exceptions import Graph6Error, GraphError
from clique_colorer.graph import Graph, from_edge_list

GRAPH6_HEADER = ">>graph6<<"


def _size_bytes(n):
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0)
        )
    raise Graph6Error(f"graph too large for graph6: n={n}")


def encode_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(sum(bit << (5 - k) for k, bit in enumerate(bits[i : i + 6])) + 63)
        for i in range(0, len(bits), 6)
    )
    return _size_bytes(g.n) + body


def parse_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
    if not text:
        raise Graph6Error("malformed header: empty string")
    values = []
    for position, char in enumerate(text):
        if not 63 <= ord(char) <= 126:
            raise Graph6Error(f"byte {ord(char)} out of range at position {position}")
        values.append(ord(char) - 63)

    if values[0] != 63:
        n, offset = values[0], 1
    elif len(values) >= 2 and values[1] == 63:
        if len(values) < 8:
            raise Graph6Error("malformed header: truncated 8-byte size")
        n, offset = 0, 8
        for value in values[2:8]:
            n = (n << 6) | value
    else:
        if len(values) < 4:
            raise Graph6Error("malformed header: truncated 4-byte size")
        n, offset = 0, 4
        for value in values[1:4]:
            n = (n << 6) | value

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    body = values[offset:]
    if len(body) != expected:
        raise Graph6Error(
            f"malformed body: expected {expected} data bytes for n={n}, got {len(body)}"
        )
    bits = [(value >> (5 - k)) & 1 for value in body for k in range(6)]
    if any(bits[bit_count:]):
        raise Graph6Error("trailing padding bits are nonzero")

    edges = []
    position = 0
    for j in range(1, n):
        for i in range(j):
            if bits[position]:
                edges.append((i, j))
            position += 1
    return from_edge_list(n, edges)


def encode_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [
        line.split()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise GraphError("empty edge list")
    try:
        header = [int(token) for token in rows[0]]
        edges = [tuple(int(token) for token in row) for row in rows[1:]]
    except ValueError as e:
        raise GraphError(f"edge list contains a non-integer token: {e}")
    if len(header) != 2:
        raise GraphError('edge list header must be "n m"')
    n, m = header
    if any(len(edge) != 2 for edge in edges):
        raise GraphError('edge lines must be "u v"')
    if len(edges) != m:
        raise GraphError(f"edge list header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def _looks_like_edge_list(line):
    tokens = line.split()
    return len(tokens) == 2 and all(token.lstrip("-").isdigit() for token in tokens)


def parse_graph_text(text: str) -> Graph:
    lines = [
        line
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise GraphError("no graph found in input")
    if _looks_like_edge_list(lines[0]):
        return parse_edge_list(text)
    return parse_graph6(lines[0])


def read_graph_file(path: str) -> Graph:
    with open(path, "r") as f:
        return parse_graph_text(f.read())


def write_graph_file(path: str, g: Graph, fmt: str = None) -> None:
    if fmt is None:
        fmt = "edges" if os.path.splitext(path)[1] in (".txt", ".edges") else "graph6"
    with open(path, "w") as f:
        if fmt == "graph6":
            f.write(encode_graph6(g) + "\n")
        elif fmt == "edges":
            f.write(encode_edge_list(g))
        else:
            raise ValueError("'fmt' must be either 'graph6' or 'edges'")


def iter_graph6_lines(path: str) -> Iterator[str]:
    with open(path, "r") as f:
        for line in f:
            line = line.strip()
            if line.startswith(GRAPH6_HEADER):
                line = line[len(GRAPH6_HEADER) :]
            if line and not line.startswith("#"):
                yield line


def read_graph6_lines(path: str) -> List[Graph]:
    return [parse_graph6(line) for line in iter_graph6_lines(path)]


def write_graph6_lines(path: str, graphs) -> int:
    count = 0
    with open(path, "w") as f:
        for g in graphs:
            f.write(encode_graph6(g) + "\n")
            count += 1
    return count
