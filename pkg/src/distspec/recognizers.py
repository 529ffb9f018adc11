"""Structural recognition: chordal, split, blocks, cyclic type, forbidden subgraphs."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import TYPE_CHECKING

from .canon import canonical_label
from .errors import NotConnected
from .graph import Graph, bfs_distances, complement, component_mask, induced_subgraph, is_connected, iter_bits

if TYPE_CHECKING:
    from .catalog import Catalog


# -- chordality -------------------------------------------------------------


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS visiting order (ties broken by smallest index)."""
    labels: list[list[int]] = [[] for _ in range(g.n)]
    visited = [False] * g.n
    order = []
    for step in range(g.n):
        best = -1
        for v in range(g.n):
            if not visited[v] and (best < 0 or labels[v] > labels[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in iter_bits(g.rows[best]):
            if not visited[w]:
                labels[w].append(g.n - step)
    return order


def _induced_cycle_through(g: Graph, v: int, a: int, b: int) -> list[int] | None:
    """Chordless cycle v-a-...-b-v avoiding the rest of N[v], if one exists."""
    allowed = ((1 << g.n) - 1) & ~(g.rows[v] | 1 << v) | 1 << a | 1 << b
    prev = {a: -1}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for u in frontier:
            for w in iter_bits(g.rows[u] & allowed):
                if w not in prev:
                    prev[w] = u
                    nxt.append(w)
        frontier = nxt
    if b not in prev:
        return None
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return [v] + path[::-1]


def find_chordless_cycle(g: Graph, hint: tuple[int, int, int] | None = None) -> list[int] | None:
    """An induced cycle of length >= 4, or None when g is chordal."""
    if hint is not None:
        cyc = _induced_cycle_through(g, *hint)
        if cyc is not None:
            return cyc
    for v in range(g.n):
        nbrs = g.neighbors(v)
        for a, b in combinations(nbrs, 2):
            if not g.has_edge(a, b):
                cyc = _induced_cycle_through(g, v, a, b)
                if cyc is not None:
                    return cyc
    return None


@dataclass(frozen=True)
class ChordalWitness:
    """A perfect elimination ordering, or a chordless cycle of length >= 4."""

    peo: tuple[int, ...] | None = None
    cycle: tuple[int, ...] | None = None


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        for a, b in combinations(later, 2):
            if not g.has_edge(a, b):
                return False
    return True


def is_chordal(g: Graph) -> tuple[bool, ChordalWitness]:
    order = lex_bfs(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in g.neighbors(v) if pos[w] < pos[v]]
        if len(earlier) < 2:
            continue
        parent = max(earlier, key=pos.__getitem__)
        for w in earlier:
            if w != parent and not g.has_edge(w, parent):
                cyc = find_chordless_cycle(g, (v, parent, w))
                return False, ChordalWitness(cycle=tuple(cyc))
    return True, ChordalWitness(peo=tuple(reversed(order)))


def is_induced_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    h = induced_subgraph(g, cycle)
    return h.m == k and all(d == 2 for d in h.degrees()) and is_connected(h)


# -- split graphs -----------------------------------------------------------


@dataclass(frozen=True)
class SplitPartition:
    clique: tuple[int, ...]
    independent: tuple[int, ...]


def is_split(g: Graph) -> tuple[bool, SplitPartition | None]:
    if not (is_chordal(g)[0] and is_chordal(complement(g))[0]):
        return False, None
    # Hammer-Simeone: the m highest-degree vertices form a clique, where m is
    # the largest i with d_i >= i - 1.
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    size = max(i + 1 for i, v in enumerate(order) if g.degree(v) >= i)
    clique = tuple(sorted(order[:size]))
    rest = tuple(sorted(order[size:]))
    return True, SplitPartition(clique, rest)


def has_induced_split_obstruction(g: Graph) -> bool:
    """Brute-force search for an induced C4, 2K2 or C5."""
    for k in (4, 5):
        for sub in combinations(range(g.n), k):
            h = induced_subgraph(g, sub)
            degs = sorted(h.degrees())
            if k == 4 and ((h.m == 4 and degs == [2, 2, 2, 2]) or (h.m == 2 and degs == [1, 1, 1, 1])):
                return True
            if k == 5 and h.m == 5 and degs == [2] * 5 and is_connected(h):
                return True
    return False


# -- blocks -----------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_count: tuple[int, ...] = field(default=())


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices via Hopcroft-Tarjan lowpoints."""
    if not is_connected(g):
        raise NotConnected("block decomposition needs a connected graph")
    if g.n == 1:
        return BlockDecomposition((frozenset({0}),), frozenset(), (1,))
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    counter = 0
    disc[0] = low[0] = counter
    stack = [(0, -1, iter(g.neighbors(0)))]
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                counter += 1
                disc[w] = low[w] = counter
                edge_stack.append((v, w))
                stack.append((w, v, iter(g.neighbors(w))))
                if v == 0:
                    root_children += 1
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(comp))
                if parent != 0:
                    cuts.add(parent)
    if root_children > 1:
        cuts.add(0)
    count = [0] * g.n
    for b in blocks:
        for v in b:
            count[v] += 1
    return BlockDecomposition(tuple(blocks), frozenset(cuts), tuple(count))


class BlockClass(str, Enum):
    NOT_BLOCK_GRAPH = "not_block_graph"
    BLOCK_STAR = "block_star"
    LOOSE = "loose"
    BG_PQ322_SUB = "bg_pq322_sub"
    BGA_SUB = "bga_sub"
    OTHER_BLOCK_GRAPH = "other_block_graph"


def is_block_graph(g: Graph) -> bool:
    dec = block_decomposition(g)
    return all(induced_subgraph(g, b).m == len(b) * (len(b) - 1) // 2 for b in dec.blocks)


def is_block_star(g: Graph) -> bool:
    dec = block_decomposition(g)
    return is_block_graph(g) and bool(frozenset.intersection(*dec.blocks))


def is_loose_block_graph(g: Graph) -> bool:
    dec = block_decomposition(g)
    return is_block_graph(g) and max(dec.block_count) <= 2


def _twin_classes(h: Graph) -> list[int]:
    closed = [h.rows[v] | 1 << v for v in range(h.n)]
    rep: dict[int, int] = {}
    return [rep.setdefault(c, v) for v, c in enumerate(closed)]


def embeds_induced(small: Graph, big: Graph) -> bool:
    """True when ``small`` is isomorphic to an induced subgraph of ``big``."""
    if small.n > big.n:
        return False
    order = []
    seen = 0
    for start in range(small.n):
        if seen >> start & 1:
            continue
        comp = component_mask(small, start)
        dist = bfs_distances(small, start)
        order += sorted(iter_bits(comp), key=lambda v: dist[v])
        seen |= comp
    twin = _twin_classes(big)
    deg_small = small.degrees()
    deg_big = big.degrees()
    image = [-1] * small.n

    def extend(i: int, used: int) -> bool:
        if i == small.n:
            return True
        v = order[i]
        tried_twins = set()
        for c in range(big.n):
            if used >> c & 1 or deg_big[c] < deg_small[v] or twin[c] in tried_twins:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if small.has_edge(u, v) != big.has_edge(image[u], c):
                    ok = False
                    break
            if not ok:
                continue
            tried_twins.add(twin[c])
            image[v] = c
            if extend(i + 1, used | 1 << c):
                return True
        image[v] = -1
        return False

    return extend(0, 0)


def clique_number(g: Graph) -> int:
    best = 0

    def grow(clique_size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, clique_size)
            return
        if clique_size + cand.bit_count() <= best:
            return
        while cand:
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            grow(clique_size + 1, cand & g.rows[v])

    grow(0, (1 << g.n) - 1)
    return best


def classify_block_graph(g: Graph, catalog: Catalog | None = None) -> BlockClass:
    """Which branch of the block-graph characterization applies, if any.

    Branches are tried in the order block star, loose, BG(p,q,3,2,2), BGA.
    The template is built with p = q = n, large enough to host any connected
    block graph on n vertices that embeds into some BG(p,q,3,2,2).
    """
    from .catalog import default_catalog
    from .families import bg_pq322

    if not is_block_graph(g):
        return BlockClass.NOT_BLOCK_GRAPH
    dec = block_decomposition(g)
    if frozenset.intersection(*dec.blocks):
        return BlockClass.BLOCK_STAR
    if max(dec.block_count) <= 2:
        return BlockClass.LOOSE
    size = max(2, g.n)
    if embeds_induced(g, bg_pq322(size, size)):
        return BlockClass.BG_PQ322_SUB
    bga = (catalog or default_catalog())["BGA"].graph
    if embeds_induced(g, bga):
        return BlockClass.BGA_SUB
    return BlockClass.OTHER_BLOCK_GRAPH


# -- cyclic type ------------------------------------------------------------


class CyclicKind(str, Enum):
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    BICYCLIC = "bicyclic"
    OTHER = "other"


class BicyclicKind(str, Enum):
    INFINITY = "infinity"
    THETA = "theta"


@dataclass(frozen=True)
class CyclicType:
    kind: CyclicKind
    cyclomatic: int
    bicyclic_kind: BicyclicKind | None = None

    def __str__(self) -> str:
        if self.kind is CyclicKind.BICYCLIC:
            return f"bicyclic({self.bicyclic_kind.value})"
        if self.kind is CyclicKind.OTHER:
            return f"other({self.cyclomatic})"
        return self.kind.value


def two_core(g: Graph) -> int:
    """Vertex mask of the 2-core (repeatedly strip vertices of degree <= 1)."""
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            if (g.rows[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    return alive


def cyclic_type(g: Graph) -> CyclicType:
    if not is_connected(g):
        raise NotConnected("cyclic type needs a connected graph")
    c = g.m - g.n + 1
    if c == 0:
        return CyclicType(CyclicKind.TREE, 0)
    if c == 1:
        return CyclicType(CyclicKind.UNICYCLIC, 1)
    if c > 2:
        return CyclicType(CyclicKind.OTHER, c)
    core = two_core(g)
    deg = {v: (g.rows[v] & core).bit_count() for v in iter_bits(core)}
    branch = [v for v, d in deg.items() if d >= 3]
    if len(branch) == 1:
        return CyclicType(CyclicKind.BICYCLIC, 2, BicyclicKind.INFINITY)
    x, y = branch
    ends = []
    for start in iter_bits(g.rows[x] & core):
        prev, cur = x, start
        while deg[cur] == 2:
            prev, cur = cur, next(w for w in iter_bits(g.rows[cur] & core) if w != prev)
        ends.append(cur)
    kind = BicyclicKind.THETA if all(e == y for e in ends) else BicyclicKind.INFINITY
    return CyclicType(CyclicKind.BICYCLIC, 2, kind)


# -- distance-preserving subgraphs and forbidden subgraphs ------------------


def is_distance_preserving(g: Graph, vertices: Iterable[int], dist: Sequence[Sequence[int]] | None = None) -> bool:
    """True when G[S] is connected and its distances agree with those in G."""
    verts = sorted(set(vertices))
    h = induced_subgraph(g, verts)
    if dist is None:
        dist = [bfs_distances(g, v) for v in verts]
        rows = {v: i for i, v in enumerate(verts)}
    else:
        rows = None
    for i, v in enumerate(verts):
        dh = bfs_distances(h, i)
        dg = dist[rows[v]] if rows is not None else dist[v]
        for j, w in enumerate(verts):
            if dh[j] != dg[w]:
                return False
    return True


@dataclass(frozen=True)
class ForbiddenWitness:
    id: str
    vertices: tuple[int, ...]


def find_forbidden(g: Graph, catalog: Catalog) -> ForbiddenWitness | None:
    """First forbidden catalog subgraph embedded distance-preservingly in g.

    Subsets are scanned by increasing size, then lexicographically.
    """
    by_size: dict[int, dict[bytes, str]] = {}
    edge_counts: dict[int, set[int]] = {}
    for fid, entry in catalog.forbidden().items():
        by_size.setdefault(entry.graph.n, {}).setdefault(canonical_label(entry.graph), fid)
        edge_counts.setdefault(entry.graph.n, set()).add(entry.graph.m)
    dist = [bfs_distances(g, v) for v in range(g.n)]
    for size in sorted(by_size):
        if size > g.n:
            break
        for sub in combinations(range(g.n), size):
            mask = 0
            for v in sub:
                mask |= 1 << v
            m2 = sum((g.rows[v] & mask).bit_count() for v in sub)
            if m2 // 2 not in edge_counts[size]:
                continue
            # every pair at G-distance 1 is an edge of G[S]; distance
            # preservation therefore only needs checking in G[S]
            if not is_distance_preserving(g, sub, dist):
                continue
            fid = by_size[size].get(canonical_label(induced_subgraph(g, sub)))
            if fid is not None:
                return ForbiddenWitness(fid, sub)
    return None
