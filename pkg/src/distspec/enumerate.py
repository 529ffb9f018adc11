"""Isomorph-free generation of small connected graphs.

Graphs of order ``n`` are produced from the representatives of order
``n - 1`` by adding one vertex joined to a nonempty neighbour set, keeping a
child only the first time its canonical label is seen.  Every connected graph
has a non-cut vertex, so this reaches every isomorphism class.  An optional
``prune`` predicate restricts the search to a class closed under deleting
non-cut vertices (trees, c-cyclic graphs with bounded c, split, chordal and
block graphs all qualify), which keeps n = 10 classes cheap.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from itertools import combinations

from .canon import canonical_label_uncached
from .errors import Unsupported
from .graph import Graph

MAX_N_UNRESTRICTED = 9
MAX_N_PRUNED = 12

Predicate = Callable[[Graph], bool]


def _extend(parent: Graph) -> Iterator[Graph]:
    n = parent.n
    rows = list(parent.rows)
    for size in range(1, n + 1):
        for nbrs in combinations(range(n), size):
            mask = 0
            new_rows = rows[:]
            for v in nbrs:
                mask |= 1 << v
                new_rows[v] |= 1 << n
            new_rows.append(mask)
            yield Graph(n + 1, tuple(new_rows))


def _level(parents: list[Graph], prune: Predicate | None) -> Iterator[Graph]:
    seen: set[bytes] = set()
    for parent in parents:
        for child in _extend(parent):
            if prune is not None and not prune(child):
                continue
            key = canonical_label_uncached(child)
            if key in seen:
                continue
            seen.add(key)
            yield child


def enumerate_connected(
    n: int,
    keep: Predicate | None = None,
    prune: Predicate | None = None,
    edges: int | None = None,
) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of connected graphs.

    ``edges`` and ``keep`` filter the final level only.  ``prune`` must be a
    class property closed under deleting a non-cut vertex; it is applied at
    every level and allows orders up to ``MAX_N_PRUNED``.
    """
    limit = MAX_N_PRUNED if prune is not None else MAX_N_UNRESTRICTED
    if not 1 <= n <= limit:
        raise Unsupported(f"built-in enumeration supports 1 <= n <= {limit}; supply a graph6 corpus instead")
    level = [Graph(1, (0,))]
    if prune is not None and not prune(level[0]):
        return
    for _ in range(2, n):
        level = list(_level(level, prune))
    # the last level is streamed; only its labels are held in memory
    final = iter(level) if n == 1 else _level(level, prune)
    for g in final:
        if edges is not None and g.m != edges:
            continue
        if keep is not None and not keep(g):
            continue
        yield g


def max_cyclomatic(c: int) -> Predicate:
    """Prune predicate for connected graphs with cyclomatic number <= c."""
    def pred(g: Graph) -> bool:
        return g.m - g.n + 1 <= c
    return pred
