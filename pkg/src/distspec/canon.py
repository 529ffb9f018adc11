"""Canonical labelling of small graphs by individualisation-refinement.

The search tree is the usual one: refine an ordered colouring to an
equitable one, pick the first smallest non-singleton cell, individualise each
of its vertices in turn and recurse.  Every leaf is a discrete colouring and
hence a relabelling; the canonical form is the lexicographically largest
relabelled adjacency code over all leaves.  Automorphisms discovered at
equal leaves prune sibling branches that lie in the same orbit of the
point stabiliser of the current prefix.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import Unsupported
from .graph import Graph, bfs_distances, iter_bits

MAX_CANON_N = 16


def _initial_colours(g: Graph) -> list[int]:
    keys = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        profile = [0] * (g.n + 1)
        for d in dist:
            profile[d if d >= 0 else g.n] += 1
        keys.append((g.degree(v), tuple(profile)))
    ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [ranks[k] for k in keys]


def _refine(rows: tuple[int, ...], colours: list[int]) -> list[int]:
    n = len(rows)
    ncol = max(colours) + 1
    while True:
        masks = [0] * ncol
        for v, c in enumerate(colours):
            masks[c] |= 1 << v
        keys = [
            (colours[v], tuple((rows[v] & masks[c]).bit_count() for c in range(ncol)))
            for v in range(n)
        ]
        uniq = sorted(set(keys))
        if len(uniq) == ncol:
            return colours
        ranks = {k: i for i, k in enumerate(uniq)}
        colours = [ranks[k] for k in keys]
        ncol = len(uniq)


def _individualise(colours: list[int], v: int) -> list[int]:
    c = colours[v]
    out = []
    for w, cw in enumerate(colours):
        if cw > c or (cw == c and w != v):
            out.append(cw + 1)
        else:
            out.append(cw)
    return out


def _code(rows: tuple[int, ...], colours: list[int]) -> tuple[int, ...]:
    n = len(rows)
    new = [0] * n
    for v, pv in enumerate(colours):
        r = 0
        for w in iter_bits(rows[v]):
            r |= 1 << colours[w]
        new[pv] = r
    return tuple(new)


class _Search:
    def __init__(self, g: Graph):
        self.rows = g.rows
        self.n = g.n
        self.best_code: tuple[int, ...] | None = None
        self.best_perm: list[int] | None = None
        self.first_code: tuple[int, ...] | None = None
        self.first_perm: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def run(self, colours: list[int]) -> None:
        self._visit(_refine(self.rows, colours), [])

    def _record_automorphism(self, perm_a: list[int], perm_b: list[int]) -> None:
        # perm maps vertex -> position; gamma(v) = b^{-1}(a(v))
        inv_b = [0] * self.n
        for v, p in enumerate(perm_b):
            inv_b[p] = v
        gamma = [inv_b[perm_a[v]] for v in range(self.n)]
        if any(gamma[v] != v for v in range(self.n)):
            self.automorphisms.append(gamma)

    def _leaf(self, colours: list[int]) -> None:
        code = _code(self.rows, colours)
        if self.first_code is None:
            self.first_code, self.first_perm = code, colours
            self.best_code, self.best_perm = code, colours
            return
        if code == self.first_code:
            self._record_automorphism(colours, self.first_perm)
        if code == self.best_code:
            if self.best_perm is not self.first_perm:
                self._record_automorphism(colours, self.best_perm)
        elif code > self.best_code:
            self.best_code, self.best_perm = code, colours

    def _orbit_rep(self, prefix: list[int], cell: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if all(gamma[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[a] = b
        return [find(v) for v in cell]

    def _visit(self, colours: list[int], prefix: list[int]) -> None:
        ncol = max(colours) + 1
        if ncol == self.n:
            self._leaf(colours)
            return
        sizes = [0] * ncol
        for c in colours:
            sizes[c] += 1
        target = min((s, c) for c, s in enumerate(sizes) if s > 1)[1]
        cell = [v for v in range(self.n) if colours[v] == target]
        done_roots: list[int] = []
        for i, v in enumerate(cell):
            if i:
                n_auts = len(self.automorphisms)
                roots = self._orbit_rep(prefix, [v] + done_roots) if n_auts else None
                if roots is not None and roots[0] in roots[1:]:
                    continue
            self._visit(_refine(self.rows, _individualise(colours, v)), prefix + [v])
            done_roots.append(v)


def _check_size(g: Graph) -> None:
    if g.n > MAX_CANON_N:
        raise Unsupported(f"canonical labelling is limited to n <= {MAX_CANON_N}")


def canonical_permutation(g: Graph) -> list[int]:
    """Return ``perm`` with ``g.relabel(perm)`` equal to the canonical form."""
    _check_size(g)
    if g.n == 1:
        return [0]
    search = _Search(g)
    search.run(_initial_colours(g))
    return list(search.best_perm)


def canonical_label_uncached(g: Graph) -> bytes:
    _check_size(g)
    if g.n == 1:
        return b"\x01\x00\x00"
    search = _Search(g)
    search.run(_initial_colours(g))
    out = bytearray([g.n])
    for r in search.best_code:
        out += r.to_bytes(2, "big")
    return bytes(out)


@lru_cache(maxsize=50_000)
def canonical_label(g: Graph) -> bytes:
    """Isomorphism-invariant key: equal keys iff the graphs are isomorphic."""
    return canonical_label_uncached(g)


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_permutation(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    _check_size(g)
    _check_size(h)
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_label(g) == canonical_label(h)
