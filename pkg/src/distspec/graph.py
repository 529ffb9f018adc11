"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitmasks.

Graphs are immutable.  Neighbourhoods are Python ints used as bitsets, which
keeps the small-graph workloads here (n <= 16 for isomorphism work, n <= 62
for I/O) fast without any external dependency.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from .errors import BadArgument, NotConnected, ParseError, TooSmall, Unsupported

GRAPH6_HEADER = ">>graph6<<"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise BadArgument("a graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise BadArgument("row count does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise BadArgument(f"vertex {u} has a neighbour outside [0, {self.n})")
            if row >> u & 1:
                raise BadArgument(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not self.rows[v] >> u & 1:
                    raise BadArgument(f"adjacency is not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise BadArgument(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise BadArgument(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for u in range(self.n):
            pu = perm[u]
            for v in iter_bits(self.rows[u]):
                rows[pu] |= 1 << perm[v]
        return Graph(self.n, tuple(rows))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- graph6 -----------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    line = text.strip("\r\n")
    base = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not line:
        raise ParseError("empty graph6 line", base)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"non-printable or out-of-range byte {ord(ch)!r}", base + i)
    n = ord(line[0]) - 63
    if n == 63:
        raise ParseError("multi-byte size prefix (n > 62) is not supported", base)
    if n < 1:
        raise ParseError("graph6 size prefix encodes an empty graph", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    data = line[1:]
    if len(data) != nbytes:
        raise ParseError(f"expected {nbytes} data bytes for n={n}, got {len(data)}", base + 1 + min(len(data), nbytes))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(data[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbytes:
        pad = nbytes * 6 - nbits
        if (ord(data[-1]) - 63) & ((1 << pad) - 1):
            raise ParseError("nonzero padding bits", base + len(line) - 1)
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Unsupported("graph6 output is limited to n <= 62")
    out = [chr(g.n + 63)]
    acc = 0
    k = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.rows[i] >> j & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | ParseError]]:
    """Yield ``(line_number, text, graph_or_error)`` for each non-blank line.

    A ``>>graph6<<`` header on the first line is skipped.  Parse failures are
    yielded rather than raised so callers can report them per line.
    """
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if lineno == 1 and text.startswith(GRAPH6_HEADER):
            text = text[len(GRAPH6_HEADER):]
        if not text:
            continue
        try:
            yield lineno, text, parse_graph6(text)
        except ParseError as exc:
            yield lineno, text, exc


# -- structure --------------------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~seen
        seen |= nxt
        for v in iter_bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def component_mask(g: Graph, source: int, within: int | None = None) -> int:
    allowed = (1 << g.n) - 1 if within is None else within
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    return component_mask(g, 0) == (1 << g.n) - 1


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Distance matrix of a connected graph as an ``n x n`` int array."""
    if g.n < 2:
        raise TooSmall("distance matrix needs n >= 2")
    d = np.empty((g.n, g.n), dtype=np.int64)
    for u in range(g.n):
        row = bfs_distances(g, u)
        if -1 in row:
            raise NotConnected("graph is not connected")
        d[u] = row
    return d


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    verts = sorted(set(vertices))
    if not verts:
        raise BadArgument("induced subgraph needs a nonempty vertex set")
    if verts[0] < 0 or verts[-1] >= g.n:
        raise BadArgument(f"vertex set {verts} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        r = 0
        for w in iter_bits(g.rows[v]):
            if w in index:
                r |= 1 << index[w]
        rows.append(r)
    return Graph(len(verts), tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << u) for u, r in enumerate(g.rows)))


# -- small named graphs used throughout -------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadArgument("a cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """``S_n = K_{1,n-1}`` with centre 0."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)
