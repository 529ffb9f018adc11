"""The catalog of named sporadic graphs shipped as ``data/catalog.tsv``."""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .canon import are_isomorphic
from .errors import CatalogError, DistSpecError
from .graph import Graph, is_connected, parse_graph6
from .spectra import EPS, HALF, lambda2

ENV_VAR = "DISTSPEC_CATALOG"
EXPECTED_TOL = 5e-4

U_IDS = tuple(f"U{i}" for i in range(1, 7))
F_IDS = tuple(f"F{i}" for i in range(1, 14))
B_IDS = tuple(f"B{i}" for i in range(1, 8))
SP_IDS = ("SP1", "SP2")
REQUIRED_IDS = U_IDS + F_IDS + B_IDS + SP_IDS + ("BGA",)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    graph: Graph
    graph6: str
    lambda2: float
    expected: float | None = None
    line: int = 0


class Catalog:
    """Immutable id -> entry mapping, validated on construction."""

    def __init__(self, entries: Iterable[CatalogEntry], source: str = "<memory>"):
        self.source = source
        self._entries: dict[str, CatalogEntry] = {}
        for e in entries:
            if e.id in self._entries:
                raise CatalogError(f"duplicate id (line {e.line})", e.id)
            self._entries[e.id] = e
        _validate(self)

    def __getitem__(self, key: str) -> CatalogEntry:
        try:
            return self._entries[key]
        except KeyError:
            raise KeyError(f"no catalog entry {key!r}") from None

    def __contains__(self, key: object) -> bool:
        return key in self._entries

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def ids(self) -> list[str]:
        return list(self._entries)

    def group(self, ids: Iterable[str]) -> dict[str, CatalogEntry]:
        return {i: self._entries[i] for i in ids}

    def forbidden(self) -> dict[str, CatalogEntry]:
        return self.group(F_IDS)


def _validate(cat: Catalog) -> None:
    # lazy: recognizers imports this module for type hints
    from .recognizers import CyclicKind, cyclic_type, is_block_graph, is_split

    for rid in REQUIRED_IDS:
        if rid not in cat:
            raise CatalogError("required id is missing", rid)
    for e in cat:
        g = e.graph
        if not is_connected(g) or g.n < 2:
            raise CatalogError("graph must be connected with n >= 2", e.id)
        if e.expected is not None and abs(e.lambda2 - e.expected) > EXPECTED_TOL:
            raise CatalogError(
                f"lambda2 = {e.lambda2:.6f} differs from expected {e.expected} by more than {EXPECTED_TOL}",
                e.id,
            )
        if e.id in F_IDS:
            if e.lambda2 < HALF - EPS:
                raise CatalogError(f"forbidden graph has lambda2 = {e.lambda2:.6f} < -1/2", e.id)
            continue
        if e.id not in REQUIRED_IDS:
            continue
        if e.lambda2 >= HALF - EPS:
            raise CatalogError(f"sporadic graph has lambda2 = {e.lambda2:.6f} >= -1/2", e.id)
        kind = cyclic_type(g).kind
        if e.id in U_IDS and kind is not CyclicKind.UNICYCLIC:
            raise CatalogError("not unicyclic", e.id)
        if e.id in B_IDS and kind is not CyclicKind.BICYCLIC:
            raise CatalogError("not bicyclic", e.id)
        if e.id in SP_IDS and not is_split(g)[0]:
            raise CatalogError("not a split graph", e.id)
        if e.id == "BGA" and not is_block_graph(g):
            raise CatalogError("not a block graph", "BGA")
    if not are_isomorphic(cat["B2"].graph, cat["BGA"].graph):
        raise CatalogError("not isomorphic to BGA", "B2")
    for group in (U_IDS, F_IDS, B_IDS, SP_IDS):
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                if are_isomorphic(cat[a].graph, cat[b].graph):
                    raise CatalogError(f"isomorphic to {a}", b)


def parse_catalog(lines: Iterable[str], source: str = "<memory>") -> Catalog:
    entries = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) not in (2, 3) or not fields[0]:
            raise CatalogError(f"line {lineno}: expected id<TAB>graph6[<TAB>expected]", fields[0] or None)
        eid, code = fields[0].strip(), fields[1].strip()
        try:
            g = parse_graph6(code)
        except DistSpecError as exc:
            raise CatalogError(f"line {lineno}: {exc}", eid) from exc
        expected = None
        if len(fields) == 3 and fields[2].strip():
            try:
                expected = float(fields[2])
            except ValueError:
                raise CatalogError(f"line {lineno}: bad expected value {fields[2]!r}", eid) from None
        try:
            lam = lambda2(g)
        except DistSpecError as exc:
            raise CatalogError(f"line {lineno}: {exc}", eid) from exc
        entries.append(CatalogEntry(eid, g, code, lam, expected, lineno))
    return Catalog(entries, source)


def default_catalog_path() -> Path | None:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return None


def load_catalog(path: str | os.PathLike | None = None) -> Catalog:
    """Load and validate a catalog file.

    With no path, ``$DISTSPEC_CATALOG`` is used if set, else the bundled file.
    """
    if path is None:
        path = default_catalog_path()
    if path is None:
        text = resources.files("distspec").joinpath("data/catalog.tsv").read_text(encoding="utf-8")
        return parse_catalog(text.splitlines(), "bundled:data/catalog.tsv")
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {p}: {exc}") from exc
    return parse_catalog(text.splitlines(), str(p))


@lru_cache(maxsize=1)
def _cached_default(env_value: str | None) -> Catalog:
    return load_catalog(env_value)


def default_catalog() -> Catalog:
    """The process-wide catalog (honours ``$DISTSPEC_CATALOG``), loaded once."""
    return _cached_default(os.environ.get(ENV_VAR) or None)
