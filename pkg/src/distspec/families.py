"""Constructors for the named graph families and family-membership search."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product

from .canon import canonical_label
from .catalog import Catalog, load_catalog  # noqa: F401  (re-exported)
from .errors import BadArgument
from .graph import Graph, complete_graph, cycle_graph, star_graph


class FamilyKind(str, Enum):
    CYCLE = "Cycle"
    COMPLETE = "Complete"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    STAR = "Star"
    STAR_PLUS = "StarPlus"
    INFINITY = "InfinityGraph"
    THETA = "ThetaGraph"
    B_FAMILY = "BFamily"
    B_INF = "BInf"
    B_THETA = "BTheta"
    SP_T = "SPt"
    K_SPLIT = "KSplit"
    TRI_PENDANT = "TriPendant"
    BLOCK_STAR = "BlockStar"
    BG_PQ322 = "BGpq322"


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: FamilyKind
    params: tuple

    def __str__(self) -> str:
        return f"{self.kind.value}({_fmt_params(self.kind, self.params)})"


def _fmt_params(kind: FamilyKind, params: tuple) -> str:
    if kind is FamilyKind.B_FAMILY:
        return f"{params[0]};{','.join(map(str, params[1:]))}"
    if kind is FamilyKind.K_SPLIT:
        s, xs = params
        return f"{s};{','.join(map(str, xs))}" if xs else f"{s}"
    if kind is FamilyKind.BLOCK_STAR:
        return ",".join(map(str, params[0]))
    return ",".join(map(str, params))


class _Builder:
    """Edge-list accumulator with fresh-vertex allocation."""

    def __init__(self, n: int = 0):
        self.n = n
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def pendant_path(self, at: int, length: int) -> None:
        prev = at
        for _ in range(length):
            nxt = self.vertex()
            self.edge(prev, nxt)
            prev = nxt

    def clique(self, vertices: list[int]) -> None:
        for i, u in enumerate(vertices):
            for v in vertices[i + 1:]:
                self.edge(u, v)

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadArgument(msg)


def infinity_graph(p: int, q: int, s: int) -> Graph:
    """Cycles C_p and C_q joined by a path of length s (s = 0: shared vertex)."""
    _need(p >= 3 and q >= 3 and s >= 0, f"InfinityGraph needs p, q >= 3 and s >= 0, got {(p, q, s)}")
    b = _Builder()
    us = [b.vertex() for _ in range(p)]
    for i in range(p):
        b.edge(us[i], us[(i + 1) % p])
    prev = us[0]
    for _ in range(s):
        nxt = b.vertex()
        b.edge(prev, nxt)
        prev = nxt
    vs = [prev] + [b.vertex() for _ in range(q - 1)]
    for i in range(q):
        b.edge(vs[i], vs[(i + 1) % q])
    return b.graph()


def theta_graph(p: int, q: int, s: int) -> Graph:
    """Two vertices joined by three internally disjoint paths of lengths p, q, s."""
    _need(min(p, q, s) >= 1, f"ThetaGraph needs p, q, s >= 1, got {(p, q, s)}")
    _need([p, q, s].count(1) <= 1, f"ThetaGraph allows at most one path of length 1, got {(p, q, s)}")
    b = _Builder(2)
    x, y = 0, 1
    for length in (p, q, s):
        prev = x
        for _ in range(length - 1):
            nxt = b.vertex()
            b.edge(prev, nxt)
            prev = nxt
        b.edge(prev, y)
    return b.graph()


def b_family(s: int, h1: int, h2: int, h3: int, h4: int) -> Graph:
    """inf(3,3,s) with pendant paths of lengths h1..h4 at its degree-2 cycle vertices.

    u1 u2 lie on the first triangle, u3 u4 on the second.
    """
    _need(s >= 0 and min(h1, h2, h3, h4) >= 0, f"BFamily parameters must be >= 0, got {(s, h1, h2, h3, h4)}")
    b = _Builder()
    a, u1, u2 = b.vertex(), b.vertex(), b.vertex()
    b.clique([a, u1, u2])
    prev = a
    for _ in range(s):
        nxt = b.vertex()
        b.edge(prev, nxt)
        prev = nxt
    u3, u4 = b.vertex(), b.vertex()
    b.clique([prev, u3, u4])
    for u, h in zip((u1, u2, u3, u4), (h1, h2, h3, h4)):
        b.pendant_path(u, h)
    return b.graph()


def b_inf(t: int) -> Graph:
    _need(t >= 0, "BInf needs t >= 0")
    b = _Builder()
    c = b.vertex()
    b.clique([c, b.vertex(), b.vertex()])
    b.clique([c, b.vertex(), b.vertex()])
    for _ in range(t):
        b.pendant_path(c, 1)
    return b.graph()


def b_theta(k: int) -> Graph:
    """K4 minus an edge with k pendant edges at vertex 0 (a degree-3 vertex)."""
    _need(k >= 0, "BTheta needs k >= 0")
    b = _Builder()
    w, z, a, c = (b.vertex() for _ in range(4))
    b.edge(w, z)
    for x in (a, c):
        b.edge(w, x)
        b.edge(z, x)
    for _ in range(k):
        b.pendant_path(w, 1)
    return b.graph()


def sp_t(t: int) -> Graph:
    """Clique {u, v, a, b}; w adjacent to u, v; t pendant vertices at u."""
    _need(t >= 0, "SPt needs t >= 0")
    b = _Builder()
    u, v, a, c = (b.vertex() for _ in range(4))
    b.clique([u, v, a, c])
    w = b.vertex()
    b.edge(w, u)
    b.edge(w, v)
    for _ in range(t):
        b.pendant_path(u, 1)
    return b.graph()


def k_split(s: int, xs: tuple[int, ...] = ()) -> Graph:
    """K_s with xs[i] pendant edges at clique vertex i."""
    _need(s >= 2, f"KSplit needs s >= 2, got {s}")
    _need(len(xs) <= s and all(x >= 0 for x in xs), f"KSplit needs at most s nonnegative counts, got {xs}")
    b = _Builder()
    vs = [b.vertex() for _ in range(s)]
    b.clique(vs)
    for v, x in zip(vs, xs):
        for _ in range(x):
            b.pendant_path(v, 1)
    return b.graph()


def tri_pendant(a: int, bb: int, c: int) -> Graph:
    """Triangle with pendant paths of lengths a, b, c at its three vertices."""
    _need(min(a, bb, c) >= 0 and a + bb + c >= 2, f"TriPendant needs lengths >= 0 summing to >= 2, got {(a, bb, c)}")
    b = _Builder()
    vs = [b.vertex() for _ in range(3)]
    b.clique(vs)
    for v, h in zip(vs, (a, bb, c)):
        b.pendant_path(v, h)
    return b.graph()


def star_plus(n: int) -> Graph:
    _need(n >= 3, "StarPlus needs n >= 3")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)] + [(1, 2)])


def block_star(sizes: tuple[int, ...]) -> Graph:
    """Cliques of the given sizes sharing vertex 0."""
    _need(len(sizes) >= 1 and all(x >= 2 for x in sizes), f"BlockStar needs block sizes >= 2, got {sizes}")
    b = _Builder()
    c = b.vertex()
    for size in sizes:
        b.clique([c] + [b.vertex() for _ in range(size - 1)])
    return b.graph()


def bg_pq322(p: int, q: int) -> Graph:
    """Block graph BG(p, q, 3, 2, 2).

    Adjacent vertices x, y lie in a K_p.  x also lies in a triangle and in a
    pendant edge; y is joined by a bridge to z, and z lies in a K_q.
    """
    _need(p >= 2 and q >= 2, f"BGpq322 needs p, q >= 2, got {(p, q)}")
    bld = _Builder()
    x, y = bld.vertex(), bld.vertex()
    bld.clique([x, y] + [bld.vertex() for _ in range(p - 2)])
    bld.clique([x, bld.vertex(), bld.vertex()])
    bld.pendant_path(x, 1)
    z = bld.vertex()
    bld.edge(y, z)
    bld.clique([z] + [bld.vertex() for _ in range(q - 1)])
    return bld.graph()


def complete_bipartite(r: int, s: int) -> Graph:
    _need(r >= 1 and s >= 1, "CompleteBipartite needs r, s >= 1")
    return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def build(desc: FamilyDescriptor) -> Graph:
    k, p = desc.kind, desc.params
    if k is FamilyKind.CYCLE:
        return cycle_graph(*p)
    if k is FamilyKind.COMPLETE:
        _need(p[0] >= 1, "Complete needs n >= 1")
        return complete_graph(*p)
    if k is FamilyKind.COMPLETE_BIPARTITE:
        return complete_bipartite(*p)
    if k is FamilyKind.STAR:
        _need(p[0] >= 2, "Star needs n >= 2")
        return star_graph(*p)
    if k is FamilyKind.STAR_PLUS:
        return star_plus(*p)
    if k is FamilyKind.INFINITY:
        return infinity_graph(*p)
    if k is FamilyKind.THETA:
        return theta_graph(*p)
    if k is FamilyKind.B_FAMILY:
        return b_family(*p)
    if k is FamilyKind.B_INF:
        return b_inf(*p)
    if k is FamilyKind.B_THETA:
        return b_theta(*p)
    if k is FamilyKind.SP_T:
        return sp_t(*p)
    if k is FamilyKind.K_SPLIT:
        return k_split(*p)
    if k is FamilyKind.TRI_PENDANT:
        return tri_pendant(*p)
    if k is FamilyKind.BLOCK_STAR:
        return block_star(*p)
    if k is FamilyKind.BG_PQ322:
        return bg_pq322(*p)
    raise BadArgument(f"unknown family kind {k!r}")


def order_and_size(desc: FamilyDescriptor) -> tuple[int, int]:
    g = build(desc)
    return g.n, g.m


# -- parameter enumeration for membership -----------------------------------


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` nonnegative ints summing to ``total``, descending lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _partitions(total: int, max_parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into at most ``max_parts`` positive parts, descending."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def candidate_params(kind: FamilyKind, n: int, m: int) -> Iterator[tuple]:
    """Parameter tuples of ``kind`` whose build has order n and size m, in lex order."""
    if kind is FamilyKind.CYCLE:
        if n >= 3 and m == n:
            yield (n,)
    elif kind is FamilyKind.COMPLETE:
        if m == n * (n - 1) // 2:
            yield (n,)
    elif kind is FamilyKind.COMPLETE_BIPARTITE:
        for r in range(1, n // 2 + 1):
            if r * (n - r) == m:
                yield (r, n - r)
    elif kind is FamilyKind.STAR:
        if n >= 2 and m == n - 1:
            yield (n,)
    elif kind is FamilyKind.STAR_PLUS:
        if n >= 3 and m == n:
            yield (n,)
    elif kind is FamilyKind.INFINITY:
        if m == n + 1:
            for p in range(3, n + 1):
                for q in range(3, n + 1):
                    s = n + 1 - p - q
                    if s >= 0:
                        yield (p, q, s)
    elif kind is FamilyKind.THETA:
        if m == n + 1:
            for p, q in product(range(1, n + 1), repeat=2):
                s = n + 1 - p - q
                if s >= 1 and [p, q, s].count(1) <= 1:
                    yield (p, q, s)
    elif kind is FamilyKind.B_FAMILY:
        if m == n + 1 and n >= 5:
            # descending, so membership reports the lex-largest equivalent tuple
            yield from _compositions(n - 5, 5)
    elif kind is FamilyKind.B_INF:
        if n >= 5 and m == n + 1:
            yield (n - 5,)
    elif kind is FamilyKind.B_THETA:
        if n >= 4 and m == n + 1:
            yield (n - 4,)
    elif kind is FamilyKind.SP_T:
        if n >= 5 and m == n + 3:
            yield (n - 5,)
    elif kind is FamilyKind.K_SPLIT:
        for s in range(2, n + 1):
            if s * (s - 1) // 2 + (n - s) == m:
                for xs in _partitions(n - s, s):
                    yield (s, xs)
    elif kind is FamilyKind.TRI_PENDANT:
        if n >= 5 and m == n:
            for a in range(n - 3, -1, -1):
                for b in range(min(a, n - 3 - a), -1, -1):
                    c = n - 3 - a - b
                    if c <= b:
                        yield (a, b, c)
    elif kind is FamilyKind.BLOCK_STAR:
        for parts in _partitions(n - 1, n - 1):
            sizes = tuple(x + 1 for x in parts)
            if sum(x * (x - 1) // 2 for x in sizes) == m:
                yield (sizes,)
    elif kind is FamilyKind.BG_PQ322:
        for p in range(2, n):
            q = n - 3 - p
            if q >= 2 and p * (p - 1) // 2 + q * (q - 1) // 2 + 5 == m:
                yield (p, q)
    else:
        raise BadArgument(f"unknown family kind {kind!r}")


@lru_cache(maxsize=None)
def _built_label(kind: FamilyKind, params: tuple) -> bytes:
    return canonical_label(build(FamilyDescriptor(kind, params)))


def membership(g: Graph, kind: FamilyKind) -> tuple | None:
    """Smallest parameter tuple (in enumeration order) whose build is isomorphic to g."""
    key = None
    for params in candidate_params(kind, g.n, g.m):
        if key is None:
            key = canonical_label(g)
        if _built_label(kind, params) == key:
            return params
    return None
