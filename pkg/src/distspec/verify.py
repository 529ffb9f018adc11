"""Classification of single graphs and exhaustive checks of the lambda2 characterizations.

Each characterization is phrased as a list of *clauses* (a parametric family
or a named sporadic graph).  ``classify`` reports every clause a graph
matches; ``verify_theorem`` runs a whole corpus and checks that the clause
side and the spectral side agree.
"""

from __future__ import annotations

import hashlib
import time
from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import Future, ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, islice
from typing import Any

import numpy as np

from . import __version__
from .canon import MAX_CANON_N, canonical_form, canonical_label
from .catalog import B_IDS, SP_IDS, U_IDS, Catalog, default_catalog
from .enumerate import enumerate_connected, max_cyclomatic
from .errors import BadArgument, ParseError, Unsupported
from .families import (
    FamilyKind,
    _built_label,
    b_theta,
    candidate_params,
    k_split,
    membership,
    sp_t,
)
from .graph import Graph, all_pairs_distances, is_connected, parse_graph6, to_graph6
from .recognizers import (
    BlockClass,
    ForbiddenWitness,
    classify_block_graph,
    clique_number,
    cyclic_type,
    find_forbidden,
    is_block_graph,
    is_chordal,
    is_split,
)
from .spectra import (
    EPS,
    GOLDEN,
    HALF,
    TriState,
    below,
    char_poly_exact,
    distance_spectrum,
    eig_symmetric,
    is_equitable,
    lambda2,
    numeric_rank,
    quotient_matrix,
)

THEOREMS = ("chordal_half", "chordal_golden", "bicyclic_main", "split_sed", "unicyclic_cor", "block_lemma")
IMPLICATIONS = {"chordal_half": HALF, "chordal_golden": GOLDEN}
CLASS_OF = {"bicyclic_main": "bicyclic", "split_sed": "split", "unicyclic_cor": "unicyclic", "block_lemma": "block"}
DERIVE_MAX_N = 10


def fmt_float(x: float) -> float:
    """Round to 12 significant digits for stable serialized output."""
    if abs(x) < 1e-12:
        return 0.0
    return float(f"{x:.12g}")


# -- clauses ----------------------------------------------------------------


@dataclass(frozen=True)
class Clause:
    theorem: str
    name: str
    params: tuple = ()

    def __str__(self) -> str:
        if not self.params:
            return f"{self.theorem}::{self.name}"
        return f"{self.theorem}::{self.name}{{{_fmt(self.params)}}}"


def _fmt(params: tuple) -> str:
    return ",".join("(" + ",".join(map(str, p)) + ")" if isinstance(p, tuple) else str(p) for p in params)


@lru_cache(maxsize=8)
def _sporadic_labels(cat: Catalog, ids: tuple[str, ...]) -> dict[bytes, str]:
    return {canonical_label(cat[i].graph): i for i in ids}


def _sporadic(g: Graph, cat: Catalog, ids: tuple[str, ...], theorem: str) -> list[Clause]:
    hit = _sporadic_labels(cat, ids).get(canonical_label(g))
    return [Clause(theorem, hit)] if hit else []


def _family(g: Graph, kind: FamilyKind, theorem: str, name: str | None = None) -> list[Clause]:
    params = membership(g, kind)
    if params is None:
        return []
    if kind is FamilyKind.B_FAMILY:
        params = (params[0], params[1:])  # rendered as {s,(h1,h2,h3,h4)}
    return [Clause(theorem, name or kind.value, params)]


def _ksplit_covered(s: int, xs: tuple[int, ...]) -> bool:
    """Whether K_s(xs) falls under one of the three K_s clauses of the split characterization.

    Those are K_s(t), K_s(a,1) with a in {1,2}, and K_s(1,...,1) with s, t >= 3.
    """
    if len(xs) <= 1:
        return True
    if xs in ((1, 1), (2, 1)):
        return True
    return s >= 3 and len(xs) >= 3 and set(xs) == {1}


def _ksplit(g: Graph, theorem: str) -> list[Clause]:
    key = None
    for s, xs in candidate_params(FamilyKind.K_SPLIT, g.n, g.m):
        if not _ksplit_covered(s, xs):
            continue
        key = key or canonical_label(g)
        if _built_label(FamilyKind.K_SPLIT, (s, xs)) == key:
            return [Clause(theorem, "KSplit", (s, xs))]
    return []


def unicyclic_clauses(g: Graph, cat: Catalog) -> list[Clause]:
    t = "Unicyclic"
    return (
        _family(g, FamilyKind.STAR_PLUS, t)
        + _family(g, FamilyKind.TRI_PENDANT, t)
        + _sporadic(g, cat, U_IDS, t)
    )


def bicyclic_clauses(g: Graph, cat: Catalog) -> list[Clause]:
    t = "Bicyclic"
    return (
        _sporadic(g, cat, B_IDS, t)
        + _family(g, FamilyKind.B_FAMILY, t)
        + _family(g, FamilyKind.B_INF, t)
        + _family(g, FamilyKind.B_THETA, t)
    )


def split_clauses(g: Graph, cat: Catalog) -> list[Clause]:
    t = "Split"
    return (
        _sporadic(g, cat, SP_IDS + ("B6", "B7"), t)
        + _family(g, FamilyKind.SP_T, t)
        + _family(g, FamilyKind.B_THETA, t)
        + _ksplit(g, t)
    )


_BLOCK_CLAUSE = {
    BlockClass.BLOCK_STAR: "BlockStar",
    BlockClass.LOOSE: "Loose",
    BlockClass.BG_PQ322_SUB: "BGpq322Sub",
    BlockClass.BGA_SUB: "BGASub",
}


def block_clauses(g: Graph, cat: Catalog) -> list[Clause]:
    name = _BLOCK_CLAUSE.get(classify_block_graph(g, cat))
    return [Clause("BlockGraph", name)] if name else []


# -- class membership --------------------------------------------------------


def in_class(g: Graph, cls: str) -> bool:
    if cls == "unicyclic":
        return g.m == g.n
    if cls == "bicyclic":
        return g.m == g.n + 1
    if cls == "split":
        return is_split(g)[0]
    if cls == "block":
        return is_block_graph(g)
    if cls == "tree":
        return g.m == g.n - 1
    if cls == "chordal":
        return is_chordal(g)[0]
    if cls == "all":
        return True
    raise BadArgument(f"unknown graph class {cls!r}")


_CLAUSES_FOR: dict[str, Callable[[Graph, Catalog], list[Clause]]] = {
    "unicyclic": unicyclic_clauses,
    "bicyclic": bicyclic_clauses,
    "split": split_clauses,
    "block": block_clauses,
}


def class_prune(cls: str) -> Callable[[Graph], bool] | None:
    """A hereditary prune predicate for the enumerator, when one exists."""
    if cls == "tree":
        return max_cyclomatic(0)
    if cls == "unicyclic":
        return max_cyclomatic(1)
    if cls == "bicyclic":
        return max_cyclomatic(2)
    if cls == "split":
        return lambda g: is_split(g)[0]
    if cls == "chordal":
        return lambda g: is_chordal(g)[0]
    if cls == "block":
        return is_block_graph
    return None


def class_corpus(cls: str, n: int) -> Iterator[Graph]:
    """Connected graphs of order n in the class, one per isomorphism type."""
    edges = {"tree": n - 1, "unicyclic": n, "bicyclic": n + 1}.get(cls)
    if cls not in ("all",) and class_prune(cls) is None:
        raise BadArgument(f"unknown graph class {cls!r}")
    return enumerate_connected(n, prune=class_prune(cls), edges=edges)


# -- classification ---------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    graph6: str
    n: int
    m: int
    lambda2: float
    below_half: TriState
    below_golden: TriState
    chordal: bool
    chordless_cycle: tuple[int, ...] | None
    split: bool
    block_graph: bool
    cyclic_type: str
    clauses: tuple[Clause, ...]
    forbidden_witness: ForbiddenWitness | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "lambda2": fmt_float(self.lambda2),
            "below_half": self.below_half.value,
            "below_golden": self.below_golden.value,
            "chordal": self.chordal,
            "chordless_cycle": list(self.chordless_cycle) if self.chordless_cycle else None,
            "split": self.split,
            "block_graph": self.block_graph,
            "cyclic_type": self.cyclic_type,
            "clauses": [str(c) for c in self.clauses] or ["NoClause"],
            "forbidden_witness": (
                {"id": self.forbidden_witness.id, "vertices": list(self.forbidden_witness.vertices)}
                if self.forbidden_witness
                else None
            ),
        }


def clauses_for(g: Graph, catalog: Catalog | None = None) -> list[Clause]:
    """Every clause of every characterization whose class contains g."""
    cat = catalog or default_catalog()
    out: list[Clause] = []
    for cls in ("block", "unicyclic", "bicyclic", "split"):
        if in_class(g, cls):
            out += _CLAUSES_FOR[cls](g, cat)
    return out


def classify(g: Graph, catalog: Catalog | None = None) -> Classification:
    if g.n > MAX_CANON_N:
        raise Unsupported(f"classification is limited to n <= {MAX_CANON_N}")
    lam = lambda2(g)
    cat = catalog or default_catalog()
    chordal, wit = is_chordal(g)
    witness = None if below(lam, HALF) is TriState.YES else find_forbidden(g, cat)
    return Classification(
        graph6=to_graph6(g),
        n=g.n,
        m=g.m,
        lambda2=lam,
        below_half=below(lam, HALF),
        below_golden=below(lam, GOLDEN),
        chordal=chordal,
        chordless_cycle=wit.cycle,
        split=is_split(g)[0],
        block_graph=is_block_graph(g),
        cyclic_type=str(cyclic_type(g)),
        clauses=tuple(clauses_for(g, cat)),
        forbidden_witness=witness,
    )


# -- reports ----------------------------------------------------------------


@dataclass
class VerificationReport:
    theorem: str
    corpus: dict[str, Any]
    counts: dict[str, int] = field(default_factory=dict)
    disagreements: list[dict[str, Any]] = field(default_factory=list)
    boundary: list[dict[str, Any]] = field(default_factory=list)
    wall_ms: int = 0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.counts.get("corpus_errors", 0)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "theorem": self.theorem,
            "corpus": self.corpus,
            "counts": self.counts,
            "disagreements": self.disagreements,
            "boundary": self.boundary,
            "wall_ms": self.wall_ms,
        }
        if self.details:
            out["details"] = self.details
        return out


# -- ID_G -------------------------------------------------------------------


def split_clique(g: Graph) -> tuple[int, ...] | None:
    """Lexicographically first maximum clique whose complement is independent."""
    omega = clique_number(g)
    for cand in combinations(range(g.n), omega):
        mask = sum(1 << v for v in cand)
        if any((g.rows[v] | 1 << v) & mask != mask for v in cand):
            continue
        rest = ((1 << g.n) - 1) & ~mask
        if all(g.rows[v] & rest == 0 for v in range(g.n) if rest >> v & 1):
            return cand
    return None


def id_g(g: Graph) -> tuple[int, ...]:
    """Independent-side vertices with at least two neighbours in the chosen maximum clique."""
    clique = split_clique(g)
    if clique is None:
        raise BadArgument("not a split graph")
    mask = sum(1 << v for v in clique)
    return tuple(v for v in range(g.n) if not mask >> v & 1 and (g.rows[v] & mask).bit_count() >= 2)


# -- theorem verification ---------------------------------------------------


def _check_one(theorem: str, code: str) -> tuple[str, dict[str, Any] | None, dict[str, Any] | None]:
    """Return (status, record, id_g record) for one corpus graph.

    status is one of agree, disagree, boundary, out_of_class.
    """
    g = parse_graph6(code)
    cat = default_catalog()
    if theorem in IMPLICATIONS:
        tau = IMPLICATIONS[theorem]
        lam = lambda2(g)
        tri = below(lam, tau)
        if tri is TriState.BOUNDARY:
            return "boundary", {"graph6": code, "lambda2": fmt_float(lam)}, None
        chordal, wit = is_chordal(g)
        if tri is TriState.YES and not chordal:
            rec = {"graph6": code, "lambda2": fmt_float(lam), "chordless_cycle": list(wit.cycle)}
            return "disagree", rec, None
        return "agree", None, None
    cls = CLASS_OF[theorem]
    if not in_class(g, cls):
        return "out_of_class", None, None
    lam = lambda2(g)
    tri = below(lam, HALF)
    if tri is TriState.BOUNDARY:
        return "boundary", {"graph6": code, "lambda2": fmt_float(lam)}, None
    clauses = _CLAUSES_FOR[cls](g, cat)
    idg = None
    if theorem == "split_sed" and tri is TriState.YES and clique_number(g) >= 3:
        members = id_g(g)
        idg = {"graph6": code, "id_g": list(members)} if len(members) > 1 else {}
    if (tri is TriState.YES) != bool(clauses):
        rec = {
            "graph6": code,
            "lambda2": fmt_float(lam),
            "below_half": tri.value,
            "clauses": [str(c) for c in clauses],
        }
        return "disagree", rec, idg
    return "agree", None, idg


def _check_batch(theorem: str, codes: list[str]) -> list[tuple[str, dict | None, dict | None]]:
    return [_check_one(theorem, c) for c in codes]


CorpusItem = Graph | tuple[int, str, Graph | ParseError]


def _normalise(corpus: Iterable[CorpusItem], errors: list[dict[str, Any]]) -> Iterator[str]:
    """Graph6 codes of the valid corpus graphs; bad items are appended to errors."""
    for i, item in enumerate(corpus, start=1):
        if isinstance(item, Graph):
            lineno, text, g = i, None, item
        else:
            lineno, text, g = item
        if isinstance(g, ParseError):
            errors.append({"line": lineno, "graph6": text, "error": str(g)})
            continue
        if g.n < 2 or not is_connected(g):
            errors.append({"line": lineno, "graph6": text or to_graph6(g), "error": "graph must be connected with n >= 2"})
            continue
        if g.n > MAX_CANON_N:
            errors.append({"line": lineno, "graph6": text or to_graph6(g), "error": f"n > {MAX_CANON_N} not supported"})
            continue
        yield to_graph6(g)


def _batched(it: Iterator[str], size: int) -> Iterator[list[str]]:
    while True:
        batch = list(islice(it, size))
        if not batch:
            return
        yield batch


def _results(theorem: str, codes: Iterator[str], jobs: int) -> Iterator[tuple[str, dict | None, dict | None]]:
    if jobs <= 1:
        for c in codes:
            yield _check_one(theorem, c)
        return
    # bounded window keeps the stream lazy; results are consumed in submission order
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        window: list[Future] = []
        for batch in _batched(codes, 256):
            window.append(pool.submit(_check_batch, theorem, batch))
            if len(window) >= 2 * jobs:
                yield from window.pop(0).result()
        for fut in window:
            yield from fut.result()


def verify_theorem(
    theorem: str,
    corpus: Iterable[CorpusItem],
    corpus_info: dict[str, Any] | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Check one characterization over a stream of graphs.

    Implications (chordal_half, chordal_golden): lambda2 < tau - eps implies
    chordal.  Characterizations: within the class, lambda2 < -1/2 - eps iff
    some clause matches.  Graphs within eps of the threshold are listed as
    boundary cases and never count as disagreements.
    """
    if theorem not in THEOREMS:
        raise BadArgument(f"unknown theorem id {theorem!r}; expected one of {', '.join(THEOREMS)}")
    start = time.perf_counter()
    errors: list[dict[str, Any]] = []
    counts = dict.fromkeys(("checked", "clause_and_spectral_agree", "disagreements", "boundary_flags", "out_of_class"), 0)
    disagreements: list[dict[str, Any]] = []
    boundary: list[dict[str, Any]] = []
    id_checked = 0
    id_bad: list[dict[str, Any]] = []
    for status, rec, idg in _results(theorem, _normalise(corpus, errors), jobs):
        if status == "out_of_class":
            counts["out_of_class"] += 1
            continue
        counts["checked"] += 1
        if status == "agree":
            counts["clause_and_spectral_agree"] += 1
        elif status == "boundary":
            counts["boundary_flags"] += 1
            boundary.append(rec)
        else:
            counts["disagreements"] += 1
            disagreements.append(rec)
        if idg is not None:
            id_checked += 1
            if idg:
                id_bad.append(idg)
    counts["corpus_errors"] = len(errors)
    details: dict[str, Any] = {}
    if errors:
        details["corpus_errors"] = errors
    if theorem == "split_sed":
        details["id_g"] = {"checked": id_checked, "violations": sorted(id_bad, key=lambda r: r["graph6"])}
        for rec in id_bad:
            disagreements.append({"graph6": rec["graph6"], "id_g": rec["id_g"], "claim": "|ID_G| <= 1"})
            counts["disagreements"] += 1
    disagreements.sort(key=lambda r: r["graph6"])
    boundary.sort(key=lambda r: r["graph6"])
    return VerificationReport(
        theorem=theorem,
        corpus=corpus_info or {"source": "iterable"},
        counts=counts,
        disagreements=disagreements,
        boundary=boundary,
        wall_ms=int((time.perf_counter() - start) * 1000),
        details=details,
    )


def theorem_corpus(theorem: str, n_max: int, n_min: int = 2) -> tuple[Iterator[Graph], dict[str, Any]]:
    """The generated corpus for a theorem (class-restricted where possible) and its provenance."""
    if theorem not in THEOREMS:
        raise BadArgument(f"unknown theorem id {theorem!r}")
    cls = CLASS_OF.get(theorem, "all")
    prune = class_prune(cls)
    limit = 9 if prune is None else 12
    if not 2 <= n_max <= limit:
        raise Unsupported(f"generated corpora for {theorem} support 2 <= nmax <= {limit}")

    def gen() -> Iterator[Graph]:
        for n in range(max(2, n_min), n_max + 1):
            yield from (enumerate_connected(n) if cls == "all" else class_corpus(cls, n))

    info = {
        "source": "generator",
        "generator": f"distspec.enumerate {__version__}",
        "class": cls,
        "n_min": max(2, n_min),
        "n_max": n_max,
    }
    return gen(), info


def file_corpus_info(path: str, data: bytes) -> dict[str, Any]:
    return {"source": "file", "path": path, "sha256": hashlib.sha256(data).hexdigest()}


# -- sporadic derivation -----------------------------------------------------

DEFAULT_DERIVE_FAMILIES = {
    "unicyclic": ("StarPlus", "TriPendant"),
    "bicyclic": ("BFamily", "BInf", "BTheta"),
    "split": ("SPt", "BTheta", "KSplit"),
}


def _matches_family(g: Graph, name: str, cls: str) -> bool:
    if name == "KSplit" and cls == "split":
        return bool(_ksplit(g, "Split"))
    try:
        kind = FamilyKind(name)
    except ValueError:
        raise BadArgument(f"unknown family {name!r}") from None
    return membership(g, kind) is not None


def derive_sporadics(
    cls: str,
    n_max: int,
    families: Sequence[str | FamilyKind] | None = None,
) -> list[Graph]:
    """Canonical forms of class members with lambda2 < -1/2 - eps not covered by the families.

    For the split class the name ``KSplit`` stands for the restricted
    K_s(...) clauses of the split characterization, not the whole family.
    """
    if cls not in DEFAULT_DERIVE_FAMILIES:
        raise BadArgument(f"derive_sporadics supports {', '.join(DEFAULT_DERIVE_FAMILIES)}")
    if n_max > DERIVE_MAX_N:
        raise Unsupported(f"derive_sporadics supports n_max <= {DERIVE_MAX_N}")
    names = [f.value if isinstance(f, FamilyKind) else f for f in (families or DEFAULT_DERIVE_FAMILIES[cls])]
    found = []
    for n in range(2, n_max + 1):
        for g in class_corpus(cls, n):
            if below(lambda2(g), HALF) is not TriState.YES:
                continue
            if any(_matches_family(g, name, cls) for name in names):
                continue
            found.append(canonical_form(g))
    return sorted(found, key=lambda h: (h.n, to_graph6(h)))


def match_to_catalog(graphs: Iterable[Graph], catalog: Catalog, ids: Sequence[str]) -> dict[str, Any]:
    """Pair derived graphs with catalog ids by isomorphism."""
    by_label = {canonical_label(catalog[i].graph): i for i in ids}
    matched, unmatched = {}, []
    for g in graphs:
        hit = by_label.get(canonical_label(g))
        if hit is None:
            unmatched.append(to_graph6(g))
        else:
            matched[hit] = to_graph6(g)
    missing = [i for i in ids if i not in matched]
    return {"matched": matched, "unmatched": unmatched, "missing": missing,
            "ok": not unmatched and not missing}


SPORADIC_TARGETS = {
    "unicyclic": (U_IDS, 10),
    "bicyclic": (B_IDS, 10),
    "split": (SP_IDS + ("B6", "B7"), 9),
}


def sporadic_crosscheck(catalog: Catalog, n_max: dict[str, int] | None = None) -> dict[str, Any]:
    out = {}
    for cls, (ids, default_n) in SPORADIC_TARGETS.items():
        n = (n_max or {}).get(cls, default_n)
        out[cls] = {"n_max": n, **match_to_catalog(derive_sporadics(cls, n), catalog, ids)}
    return out


# -- quotient identities -----------------------------------------------------


@dataclass(frozen=True)
class QuotientSetup:
    graph: Graph
    matrix: np.ndarray
    blocks: list[list[int]]
    shift: int  # the matrix is D + shift * I
    expected: tuple[int, ...]
    sign_values: dict[str, tuple[Fraction, Fraction]]


def _poly_at(coeffs: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def btheta_setup(k: int) -> QuotientSetup:
    if k < 1:
        raise BadArgument("BTheta identities need k >= 1")
    g = b_theta(k)
    n = k + 4
    mat = all_pairs_distances(g) + 2 * np.eye(n, dtype=np.int64)
    blocks = [[0], [1], [2, 3], list(range(4, n))]
    exp = (1, -2 * n, 3 * (n + 1), 4 * (n - 6), -6 * n + 24)

    def gpoly(x: Fraction) -> Fraction:
        return x**4 - 12 * x**3 + 70 * x**2 - 12 * x + 1

    def gprime(x: Fraction) -> Fraction:
        return 4 * (x**3 - 9 * x**2 + 35 * x - 3)

    f = lambda x: _poly_at(exp, Fraction(x))  # noqa: E731
    signs = {
        "f(7)": (f(7), Fraction(2404 - 517 * n)),
        "f(3/2)": (f(Fraction(3, 2)), Fraction(-3, 16)),
        "f(0)": (f(0), Fraction(24 - 6 * n)),
        "f((3n-1)/(2n))": (f(Fraction(3 * n - 1, 2 * n)), gpoly(Fraction(n)) / (16 * n**4)),
        "g(5)": (gpoly(Fraction(5)), Fraction(816)),
        "g'(5)": (gprime(Fraction(5)), Fraction(288)),
    }
    return QuotientSetup(g, mat, blocks, 2, exp, signs)


def spt_setup(t: int) -> QuotientSetup:
    if t < 1:
        raise BadArgument("SPt identities need t >= 1")
    g = sp_t(t)
    blocks = [[2, 3], list(range(5, t + 5)), [0], [1], [4]]
    exp = (1, -(2 * t - 1), -(15 * t + 17), -(33 * t + 49), -(23 * t + 44), -5 * t - 12)
    f = lambda x: _poly_at(exp, Fraction(x))  # noqa: E731
    bound = Fraction(-(t + 1), 2 * t)
    signs = {
        "f(-1/2)": (f(Fraction(-1, 2)), Fraction(-3, 32)),
        "f(-1)": (f(-1), Fraction(-2 * t)),
        "f(-3)": (f(-3), Fraction(10 * t - 24)),
        # constant term of the bracket is -1
        "f(-(t+1)/(2t))": (f(bound), Fraction(t**5 + 19 * t**4 - 142 * t**3 + 62 * t**2 - 3 * t - 1, 32 * t**5)),
    }
    return QuotientSetup(g, all_pairs_distances(g), blocks, 0, exp, signs)


def ks21_setup(s: int) -> QuotientSetup:
    if s < 3:
        raise BadArgument("Ks21 identities need s >= 3")
    g = k_split(s, (2, 1))
    blocks = [list(range(2, s)), [s, s + 1], [0], [1], [s + 2]]
    exp = (1, -(s - 1), -12 * (s + 1), -(40 * s + 2), -(37 * s - 10), -10 * s + 4)
    f = lambda x: _poly_at(exp, Fraction(x))  # noqa: E731
    bound = Fraction(-(s + 1), 2 * s)
    signs = {
        "f(0)": (f(0), Fraction(4 - 10 * s)),
        "f(-1/2)": (f(Fraction(-1, 2)), Fraction(1 - 2 * s, 32)),
        "f(-1)": (f(-1), Fraction(4 - 2 * s)),
        "f(-4)": (f(-4), Fraction(2 * (5 * s - 34))),
        # note the overall minus sign
        "f(-(s+1)/(2s))": (
            f(bound),
            -Fraction(2 * s**6 - 89 * s**5 + 233 * s**4 - 170 * s**3 - 44 * s**2 + 3 * s + 1, 32 * s**5),
        ),
    }
    return QuotientSetup(g, all_pairs_distances(g), blocks, 0, exp, signs)


QUOTIENT_FAMILIES: dict[str, Callable[[int], QuotientSetup]] = {
    "BTheta": btheta_setup,
    "SPt": spt_setup,
    "Ks21": ks21_setup,
}


def verify_quotient_identities(family: str, params: Iterable[int]) -> VerificationReport:
    """Exact checks of the quotient characteristic polynomials and their sign tables."""
    if family not in QUOTIENT_FAMILIES:
        raise BadArgument(f"family must be one of {', '.join(QUOTIENT_FAMILIES)}")
    start = time.perf_counter()
    failures: list[dict[str, Any]] = []
    checked = 0
    for p in params:
        setup = QUOTIENT_FAMILIES[family](p)
        checked += 1
        if not is_equitable(setup.matrix, setup.blocks):
            failures.append({"param": p, "check": "equitable"})
            continue
        poly = char_poly_exact(quotient_matrix(setup.matrix, setup.blocks))
        if poly.coefficients != setup.expected:
            for i, (got, want) in enumerate(zip(poly.coefficients, setup.expected)):
                if got != want:
                    failures.append({"param": p, "check": f"coefficient of x^{poly.degree - i}", "got": got, "expected": want})
        for name, (got, want) in setup.sign_values.items():
            if got != want:
                failures.append({"param": p, "check": name, "got": str(got), "expected": str(want)})
    params_seen = checked
    return VerificationReport(
        theorem=f"quotient_identities:{family}",
        corpus={"source": "family", "family": family, "count": params_seen},
        counts={"checked": checked, "disagreements": len(failures)},
        disagreements=failures,
        wall_ms=int((time.perf_counter() - start) * 1000),
    )


def quotient_eigenvalues_contained(setup: QuotientSetup, tol: float = 1e-7) -> bool:
    """Every eigenvalue of the quotient is an eigenvalue of the full matrix."""
    q = quotient_matrix(setup.matrix, setup.blocks).astype(float)
    full = eig_symmetric(setup.matrix).values
    return all(min(abs(z - x) for x in full) <= tol * max(1.0, abs(z)) for z in np.linalg.eigvals(q))


# -- bounds and monotonicity -------------------------------------------------


def verify_btheta_bounds(ks: Iterable[int]) -> VerificationReport:
    start = time.perf_counter()
    failures: list[dict[str, Any]] = []
    values = []
    checked = 0
    for k in ks:
        if k < 1:
            raise BadArgument("BTheta bounds need k >= 1")
        checked += 1
        n = k + 4
        g = b_theta(k)
        spec = distance_spectrum(g)
        lam = spec.lambda2
        values.append((k, lam))
        lo = -(n + 1) / (2 * n)
        if not (lo + EPS < lam < HALF - EPS):
            failures.append({"param": k, "check": "bounds", "lambda2": fmt_float(lam), "lower": fmt_float(lo)})
        shifted = all_pairs_distances(g) + 2 * np.eye(n, dtype=np.int64)
        r = numeric_rank(shifted)
        if r != 4:
            failures.append({"param": k, "check": "rank(D+2I)", "got": r})
        mult = spec.multiplicity(-2.0)
        if mult != n - 4:
            failures.append({"param": k, "check": "multiplicity of -2", "got": mult, "expected": n - 4})
    failures += _monotone_failures(values)
    return VerificationReport(
        theorem="btheta_bounds",
        corpus={"source": "family", "family": "BTheta", "count": checked},
        counts={"checked": checked, "disagreements": len(failures)},
        disagreements=failures,
        wall_ms=int((time.perf_counter() - start) * 1000),
        details={"lambda2": [[k, fmt_float(v)] for k, v in values]},
    )


MONOTONE_TOL = 1e-12


def _monotone_failures(values: list[tuple[int, float]]) -> list[dict[str, Any]]:
    out = []
    for (p0, a), (p1, b) in zip(values, values[1:]):
        if b < a - MONOTONE_TOL:
            out.append({"param": p1, "check": "nondecreasing", "previous": fmt_float(a), "value": fmt_float(b)})
    return out


def _family_graph(family: str, p: int) -> Graph:
    if family == "SPt":
        return sp_t(p)
    if family == "Ks21":
        return k_split(p, (2, 1))
    if family == "BTheta":
        return b_theta(p)
    raise BadArgument(f"family must be SPt, Ks21 or BTheta, got {family!r}")


def _bound_certified(family: str, p: int) -> bool | None:
    """Whether the exact sign certificate for lambda2 > -(x+1)/(2x) holds.

    The certificate is f(bound) > 0 together with f(-1/2) < 0, which traps a
    quotient eigenvalue strictly between the bound and -1/2.  None when the
    family has no quotient setup at this parameter.
    """
    if family == "SPt" and p >= 1:
        setup, key = spt_setup(p), "f(-(t+1)/(2t))"
    elif family == "Ks21" and p >= 3:
        setup, key = ks21_setup(p), "f(-(s+1)/(2s))"
    elif family == "BTheta" and p >= 1:
        setup, key = btheta_setup(p), "f((3n-1)/(2n))"
    else:
        return None
    return setup.sign_values[key][0] > 0


def _bound_value(family: str, p: int) -> float | None:
    x = p + 4 if family == "BTheta" else p
    return -(x + 1) / (2 * x) if x > 0 else None


def verify_monotone_family(family: str, params: Sequence[int]) -> VerificationReport:
    """lambda2 nondecreasing along the family and below -1/2.

    The lower bound -(x+1)/(2x) is asserted exactly where its sign
    certificate holds; elsewhere it is recorded but not required.
    """
    params = list(params)
    if len(params) < 2:
        raise BadArgument("need at least two parameters")
    start = time.perf_counter()
    failures: list[dict[str, Any]] = []
    values = [(p, lambda2(_family_graph(family, p))) for p in params]
    failures += _monotone_failures(values)
    certified, uncertified = [], []
    for p, lam in values:
        if not lam < HALF - EPS:
            failures.append({"param": p, "check": "below -1/2", "lambda2": fmt_float(lam)})
        bound = _bound_value(family, p)
        if bound is None:
            continue
        cert = _bound_certified(family, p)
        entry = {"param": p, "lambda2": fmt_float(lam), "bound": fmt_float(bound), "holds": lam > bound}
        if cert:
            certified.append(p)
            if not lam > bound:
                failures.append({"check": "lower bound", **entry})
        else:
            uncertified.append(entry)
    return VerificationReport(
        theorem=f"monotone:{family}",
        corpus={"source": "family", "family": family, "params": [params[0], params[-1]]},
        counts={"checked": len(values), "disagreements": len(failures), "bound_certified": len(certified)},
        disagreements=failures,
        wall_ms=int((time.perf_counter() - start) * 1000),
        details={"lambda2": [[p, fmt_float(v)] for p, v in values], "bound_uncertified": uncertified},
    )


__all__ = [
    "Classification",
    "Clause",
    "VerificationReport",
    "THEOREMS",
    "block_clauses",
    "bicyclic_clauses",
    "class_corpus",
    "classify",
    "clauses_for",
    "derive_sporadics",
    "id_g",
    "in_class",
    "match_to_catalog",
    "split_clauses",
    "sporadic_crosscheck",
    "theorem_corpus",
    "unicyclic_clauses",
    "verify_btheta_bounds",
    "verify_monotone_family",
    "verify_quotient_identities",
    "verify_theorem",
]
