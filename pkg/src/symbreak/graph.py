"""Simple undirected graphs on vertices 0..n-1, plus graph6 and edge-list I/O.

Adjacency is stored as one integer bitmask per vertex: bit ``v`` of
``rows[u]`` is set iff ``u ~ v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DuplicateEdge, EmptyUnion, InvalidEdge, OutOfRange, ParseError, Unsupported

GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise OutOfRange(f"row {u} has bits beyond vertex {self.n - 1}")
            if row >> u & 1:
                raise InvalidEdge(f"loop at vertex {u}")
            for v in _bits(row):
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def matrix(self) -> list[list[int]]:
        return [[self.rows[u] >> v & 1 for v in range(self.n)] for u in range(self.n)]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows), self.name)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.num_edges()}>"


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def build_graph(n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    if n < 1:
        raise OutOfRange("n must be at least 1")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        if rows[u] >> v & 1:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), name)


def from_rows(rows: Sequence[int], name: str | None = None) -> Graph:
    return Graph(len(rows), tuple(rows), name)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = tuple(full & ~r & ~(1 << u) for u, r in enumerate(g.rows))
    name = f"co-{g.name}" if g.name else None
    return Graph(g.n, rows, name)


def block_offsets(parts: Sequence[Graph]) -> list[int]:
    """Starting vertex of each part inside ``disjoint_union(parts)``."""
    offsets, at = [], 0
    for p in parts:
        offsets.append(at)
        at += p.n
    return offsets


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    if not parts:
        raise EmptyUnion("disjoint union of no graphs")
    rows: list[int] = []
    for off, p in zip(block_offsets(parts), parts):
        rows.extend(r << off for r in p.rows)
    return Graph(len(rows), tuple(rows))


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return build_graph(len(vertices), edges)


# graph6 uses the upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
def _g6_pairs(n: int):
    for v in range(1, n):
        for u in range(v):
            yield u, v


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise Unsupported(f"graph6 short form covers n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [g.rows[u] >> v & 1 for u, v in _g6_pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range 63..126")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise ParseError("only the short (one-byte) size header is accepted")
    if n < 1:
        raise ParseError("graph6 string encodes a graph with no vertices")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> k & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits")
    edges = [pair for pair, b in zip(_g6_pairs(n), bits) if b]
    return build_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Plain edge list: first line ``n``, then one ``u v`` pair per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise ParseError(f"malformed edge list: {exc}") from None
    return build_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def labeled_graphs(n: int):
    """Every labeled graph on n vertices; the index bits follow graph6 pair order."""
    pairs = list(_g6_pairs(n))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if mask >> bit & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, tuple(rows))

