from fractions import Fraction

import numpy as np
import pytest
import sympy

import distspec.verify as V
from distspec.canon import are_isomorphic
from distspec.errors import BadArgument, Unsupported
from distspec.families import b_family, b_theta, k_split, sp_t, star_plus
from distspec.graph import Graph, cycle_graph, parse_graph6, path_graph, read_graph6_lines, to_graph6
from distspec.spectra import HALF, TriState, lambda2

from oracles import numpy_lambda2


def _clauses(g):
    return V.classify(g).to_dict()["clauses"]


def test_classify_examples():
    assert _clauses(k_split(2, (3,))) == ["BlockGraph::BlockStar", "Split::KSplit{2,(3)}"]
    assert _clauses(path_graph(4)) == ["BlockGraph::Loose", "Split::KSplit{2,(1,1)}"]
    assert _clauses(b_theta(3)) == ["Bicyclic::BTheta{3}", "Split::BTheta{3}"]
    assert "Bicyclic::BFamily{2,(1,0,0,0)}" in _clauses(b_family(2, 1, 0, 0, 0))
    assert "Unicyclic::StarPlus{5}" in _clauses(star_plus(5))
    assert _clauses(sp_t(2)) == ["Split::SPt{2}"]
    assert _clauses(k_split(4, (1, 1, 1))) == ["BlockGraph::Loose", "Split::KSplit{4,(1,1,1)}"]
    assert _clauses(cycle_graph(4)) == ["NoClause"]


def test_classify_c5_sits_on_the_golden_boundary():
    d = V.classify(cycle_graph(5)).to_dict()
    assert d["below_half"] == "no" and d["below_golden"] == "boundary"
    assert d["chordal"] is False and len(d["chordless_cycle"]) == 5


def test_classify_reports_forbidden_witness(catalog):
    f11 = catalog["F11"].graph
    d = V.classify(f11, catalog).to_dict()
    assert d["forbidden_witness"]["id"] == "F11"


def test_classify_sporadics(catalog):
    for eid in ("U1", "B3", "SP2"):
        d = V.classify(catalog[eid].graph, catalog).to_dict()
        assert any(c.endswith("::" + eid) for c in d["clauses"]), d["clauses"]


def test_classify_limits():
    with pytest.raises(Unsupported):
        V.classify(path_graph(17))


def test_unknown_theorem():
    with pytest.raises(BadArgument):
        V.verify_theorem("nope", [])
    with pytest.raises(Unsupported):
        V.theorem_corpus("chordal_half", 10)
    with pytest.raises(Unsupported):
        V.theorem_corpus("bicyclic_main", 13)


@pytest.mark.parametrize(
    "theorem, nmax, checked",
    [
        ("chordal_half", 6, 1 + 2 + 6 + 21 + 112),
        ("unicyclic_cor", 7, 1 + 2 + 5 + 13 + 33),
        ("bicyclic_main", 7, 1 + 5 + 19 + 67),
        ("block_lemma", 7, 1 + 2 + 4 + 9 + 22 + 59),
    ],
)
def test_small_runs_agree(theorem, nmax, checked):
    gen, info = V.theorem_corpus(theorem, nmax)
    rep = V.verify_theorem(theorem, gen, info)
    assert rep.ok and rep.disagreements == []
    assert rep.counts["checked"] == checked
    assert info["source"] == "generator" and info["n_max"] == nmax


def test_split_run_records_id_g():
    gen, info = V.theorem_corpus("split_sed", 7)
    rep = V.verify_theorem("split_sed", gen, info)
    assert rep.ok and rep.details["id_g"]["violations"] == []
    assert rep.details["id_g"]["checked"] > 0


def test_golden_boundary_small():
    gen, info = V.theorem_corpus("chordal_golden", 6)
    rep = V.verify_theorem("chordal_golden", gen, info)
    assert rep.ok
    assert any(are_isomorphic(parse_graph6(b["graph6"]), cycle_graph(5)) for b in rep.boundary)


def test_file_corpus_with_errors(tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_text("Ch\nA?x\nB?\nDhc\n")
    data = path.read_bytes()
    rep = V.verify_theorem(
        "chordal_half", read_graph6_lines(path.read_text().splitlines()), V.file_corpus_info(str(path), data)
    )
    assert rep.counts["checked"] == 2 and rep.counts["corpus_errors"] == 2
    assert not rep.ok
    assert [e["line"] for e in rep.details["corpus_errors"]] == [2, 3]
    assert len(rep.corpus["sha256"]) == 64


def test_disagreement_is_reported(monkeypatch):
    # with the clause list emptied, a graph below -1/2 must surface as a disagreement
    monkeypatch.setitem(V._CLAUSES_FOR, "unicyclic", lambda g, cat: [])
    rep = V.verify_theorem("unicyclic_cor", [cycle_graph(4), star_plus(5)])
    assert rep.counts == {"checked": 2, "clause_and_spectral_agree": 1, "disagreements": 1, "boundary_flags": 0,
                          "out_of_class": 0, "corpus_errors": 0}
    (rec,) = rep.disagreements
    assert rec["below_half"] == "yes" and rec["clauses"] == [] and not rep.ok


def test_jobs_are_deterministic():
    a = V.verify_theorem("bicyclic_main", V.theorem_corpus("bicyclic_main", 7)[0], jobs=1)
    b = V.verify_theorem("bicyclic_main", V.theorem_corpus("bicyclic_main", 7)[0], jobs=2)
    da, db = a.to_dict(), b.to_dict()
    da.pop("wall_ms"), db.pop("wall_ms")
    assert da == db


def test_id_g_examples():
    g = sp_t(3)
    assert V.split_clique(g) == (0, 1, 2, 3)
    assert V.id_g(g) == (4,)
    assert V.id_g(k_split(4, (1, 1))) == ()
    with pytest.raises(BadArgument):
        V.id_g(cycle_graph(4))


def test_derive_limits():
    with pytest.raises(Unsupported):
        V.derive_sporadics("bicyclic", 11)
    with pytest.raises(BadArgument):
        V.derive_sporadics("tree", 5)


def test_derive_small_unicyclic(catalog):
    found = V.derive_sporadics("unicyclic", 7)
    res = V.match_to_catalog(found, catalog, ("U1", "U2", "U3", "U4", "U5"))
    assert res["ok"], res


def test_derive_with_fewer_families_finds_more():
    assert len(V.derive_sporadics("unicyclic", 6, families=("StarPlus",))) > len(V.derive_sporadics("unicyclic", 6))


# -- quotient identities ------------------------------------------------------


@pytest.mark.parametrize("family, params", [("BTheta", range(1, 13)), ("SPt", range(1, 13)), ("Ks21", range(3, 13))])
def test_quotient_identities(family, params):
    rep = V.verify_quotient_identities(family, params)
    assert rep.disagreements == [] and rep.counts["checked"] == len(params)


def _sympy_charpoly(setup):
    q = V.quotient_matrix(setup.matrix, setup.blocks)
    x = sympy.Symbol("x")
    return x, sympy.Poly(sympy.Matrix(q.tolist()).charpoly(x).as_expr(), x)


@pytest.mark.parametrize("family, p", [("BTheta", 4), ("SPt", 5), ("Ks21", 6)])
def test_quotient_polynomial_against_sympy(family, p):
    setup = V.QUOTIENT_FAMILIES[family](p)
    _, poly = _sympy_charpoly(setup)
    assert tuple(int(c) for c in poly.all_coeffs()) == setup.expected


def test_ks21_bound_point_sign():
    """The value at -(s+1)/(2s) is minus the commonly quoted polynomial over 32 s^5."""
    s = sympy.Symbol("s", positive=True)
    x = sympy.Symbol("x")
    f = x**5 - (s - 1) * x**4 - 12 * (s + 1) * x**3 - (40 * s + 2) * x**2 - (37 * s - 10) * x - 10 * s + 4
    val = sympy.factor(f.subs(x, -(s + 1) / (2 * s)))
    quoted = 2 * s**6 - 89 * s**5 + 233 * s**4 - 170 * s**3 - 44 * s**2 + 3 * s + 1
    assert sympy.simplify(val + quoted / (32 * s**5)) == 0
    # the quoted polynomial turns positive at s = 42, so the value turns negative there
    assert quoted.subs(s, 41) < 0 < quoted.subs(s, 42)


def test_ks21_lower_bound_fails_from_42():
    for s in (40, 41):
        assert lambda2(k_split(s, (2, 1))) > -(s + 1) / (2 * s)
    for s in (42, 50):
        assert lambda2(k_split(s, (2, 1))) < -(s + 1) / (2 * s)
    assert lambda2(k_split(60, (2, 1))) < HALF


def test_spt_bound_point_constant():
    t = sympy.Symbol("t", positive=True)
    x = sympy.Symbol("x")
    f = x**5 - (2 * t - 1) * x**4 - (15 * t + 17) * x**3 - (33 * t + 49) * x**2 - (23 * t + 44) * x - 5 * t - 12
    val = sympy.together(f.subs(x, -(t + 1) / (2 * t)))
    corrected = (t**5 + 19 * t**4 - 142 * t**3 + 62 * t**2 - 3 * t - 1) / (32 * t**5)
    assert sympy.simplify(val - corrected) == 0
    assert corrected.subs(t, 5) < 0 < corrected.subs(t, 6)


def test_btheta_bound_identity_exact():
    for k in range(1, 8):
        setup = V.btheta_setup(k)
        got, want = setup.sign_values["f((3n-1)/(2n))"]
        assert got == want > 0


def test_quotient_containment():
    for fam, p in [("BTheta", 5), ("SPt", 4), ("Ks21", 5)]:
        assert V.quotient_eigenvalues_contained(V.QUOTIENT_FAMILIES[fam](p))


def test_quotient_setups_reject_small_params():
    for fam, p in [("BTheta", 0), ("SPt", 0), ("Ks21", 2)]:
        with pytest.raises(BadArgument):
            V.QUOTIENT_FAMILIES[fam](p)


def test_btheta_bounds():
    rep = V.verify_btheta_bounds(range(1, 16))
    assert rep.disagreements == []


def test_monotone_families():
    for fam, params in [("BTheta", range(0, 15)), ("SPt", range(0, 12)), ("Ks21", range(2, 45))]:
        rep = V.verify_monotone_family(fam, list(params))
        assert rep.disagreements == [], (fam, rep.disagreements)
    ks = V.verify_monotone_family("Ks21", list(range(2, 45)))
    unc = {e["param"] for e in ks.details["bound_uncertified"]}
    assert unc == {2, 42, 43, 44}
    assert [e["holds"] for e in ks.details["bound_uncertified"] if e["param"] >= 42] == [False] * 3


def test_numpy_oracle_agrees_on_families():
    for g in (b_theta(6), sp_t(4), k_split(5, (2, 1))):
        assert lambda2(g) == pytest.approx(numpy_lambda2(g), abs=1e-10)


def test_fmt_float():
    assert V.fmt_float(1e-15) == 0.0
    assert V.fmt_float(-0.38196601125010515) == -0.38196601125
