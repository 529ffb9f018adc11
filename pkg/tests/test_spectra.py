import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distspec.errors import BadArgument, NotConnected, TooSmall
from distspec.families import b_theta, theta_graph
from distspec.graph import Graph, all_pairs_distances, complete_graph, cycle_graph, disjoint_union, path_graph
from distspec.spectra import (
    GOLDEN,
    IntPolynomial,
    TriState,
    below,
    char_poly_exact,
    check_interlacing,
    cycle_lambda2_closed_form,
    distance_spectrum,
    eig_symmetric,
    is_equitable,
    lambda2,
    numeric_rank,
    quotient_matrix,
)

from oracles import numpy_lambda2
from strategies import connected_graphs


def test_eig_examples():
    assert eig_symmetric(np.eye(3)).values == pytest.approx((1, 1, 1), abs=1e-12)
    assert eig_symmetric(np.ones((3, 3)) - np.eye(3)).values == pytest.approx((2, -1, -1), abs=1e-12)
    assert lambda2(cycle_graph(5)) == pytest.approx(GOLDEN, abs=1e-12)


def test_eig_rejects_asymmetric_and_nonfinite():
    with pytest.raises(BadArgument):
        eig_symmetric([[0, 1], [0, 0]])
    with pytest.raises(BadArgument):
        eig_symmetric([[np.nan, 0], [0, 0]])
    with pytest.raises(BadArgument):
        eig_symmetric([[1, 2, 3]])


def test_eig_handles_extreme_scales():
    m = np.diag([1e200, -1e200, 1.0])
    m[0, 2] = m[2, 0] = 1e-200
    vals = eig_symmetric(m).values
    assert vals[0] == pytest.approx(1e200) and vals[2] == pytest.approx(-1e200)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_eig_matches_lapack(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n))
    a = a + a.T
    got = np.array(eig_symmetric(a).values)
    want = np.sort(np.linalg.eigvalsh(a))[::-1]
    assert np.allclose(got, want, atol=1e-9 * max(1.0, np.abs(a).max()))


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=10))
def test_spectrum_invariants(g):
    spec = distance_spectrum(g)
    assert spec.order == g.n
    assert list(spec.values) == sorted(spec.values, reverse=True)
    assert abs(sum(spec.values)) < 1e-8
    assert spec.lambda2 == pytest.approx(numpy_lambda2(g), abs=1e-9)


def test_lambda2_examples():
    for n in range(2, 8):
        assert lambda2(complete_graph(n)) == pytest.approx(-1, abs=1e-12)
    k5e = Graph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) != (0, 1)])
    assert lambda2(k5e) == pytest.approx(-0.4495, abs=5e-4)
    assert lambda2(theta_graph(2, 2, 1)) == pytest.approx(-0.5616, abs=5e-4)
    with pytest.raises(NotConnected):
        lambda2(disjoint_union(path_graph(2), path_graph(3)))
    with pytest.raises(TooSmall):
        lambda2(Graph(1, (0,)))


def test_cycle_closed_form():
    assert cycle_lambda2_closed_form(4) == 0
    assert cycle_lambda2_closed_form(3) == pytest.approx(-1)
    assert cycle_lambda2_closed_form(5) == pytest.approx(GOLDEN, abs=1e-9)
    with pytest.raises(BadArgument):
        cycle_lambda2_closed_form(2)
    for n in range(3, 21):
        assert lambda2(cycle_graph(n)) == pytest.approx(cycle_lambda2_closed_form(n), abs=1e-8)


def test_below_tristate():
    assert below(-0.6, -0.5) is TriState.YES
    assert below(-0.4, -0.5) is TriState.NO
    assert below(-0.5 + 5e-10, -0.5) is TriState.BOUNDARY
    assert below(lambda2(cycle_graph(5)), GOLDEN) is TriState.BOUNDARY


def test_interlacing_examples():
    d = all_pairs_distances(cycle_graph(5))
    assert check_interlacing(d, range(5)).worst_violation == pytest.approx(0, abs=1e-9)
    for drop in range(5):
        assert check_interlacing(d, [v for v in range(5) if v != drop]).ok
    with pytest.raises(BadArgument):
        check_interlacing(d, [])
    with pytest.raises(BadArgument):
        check_interlacing(d, [9])


def test_interlacing_slack_is_reported():
    # the principal 1x1 submatrix of diag(1, 0) sits exactly on the endpoints
    rep = check_interlacing(np.diag([1.0, 0.0]), [0])
    assert rep.ok and rep.worst_violation == pytest.approx(0.0)
    rep = check_interlacing(np.array([[0.0, 1.0], [1.0, 0.0]]), [1])
    assert rep.ok and rep.worst_violation == pytest.approx(1.0)


def test_equitable_examples():
    d = all_pairs_distances(path_graph(4))
    assert is_equitable(d, [[0], [1], [2], [3]])
    assert is_equitable(d, [[0, 3], [1, 2]])
    assert not is_equitable(d, [[0, 1], [2, 3]])
    with pytest.raises(BadArgument):
        is_equitable(d, [[0, 1], [1, 2, 3]])
    with pytest.raises(BadArgument):
        is_equitable(d, [[0, 1, 2]])
    with pytest.raises(BadArgument):
        quotient_matrix(d, [[0, 1], [2, 3]])


def test_btheta_quotient_block_form():
    for k in (2, 5):
        n = k + 4
        g = b_theta(k)
        m = all_pairs_distances(g) + 2 * np.eye(n, dtype=np.int64)
        blocks = [[0], [1], [2, 3], list(range(4, n))]
        assert is_equitable(m, blocks)
        q = quotient_matrix(m, blocks)
        assert q.tolist() == [
            [2, 1, 2, n - 4],
            [1, 2, 2, 2 * (n - 4)],
            [1, 1, 4, 2 * (n - 4)],
            [1, 2, 4, 2 * (n - 4)],
        ]


def test_quotient_float_path():
    d = all_pairs_distances(path_graph(4)).astype(float)
    assert is_equitable(d, [[0, 3], [1, 2]])
    assert quotient_matrix(d, [[0, 3], [1, 2]]).tolist() == [[3.0, 3.0], [3.0, 1.0]]


def test_char_poly_examples():
    n = 5
    q = [[2, 1, 2, n - 4], [1, 2, 2, 2 * (n - 4)], [1, 1, 4, 2 * (n - 4)], [1, 2, 4, 2 * (n - 4)]]
    assert char_poly_exact(q).coefficients == (1, -10, 18, -4, -6)
    assert char_poly_exact([[0]]).coefficients == (1, 0)
    assert char_poly_exact(np.array([[2.0, 0.0], [0.0, 3.0]])).coefficients == (1, -5, 6)
    with pytest.raises(BadArgument):
        char_poly_exact([[0.5]])
    with pytest.raises(BadArgument):
        char_poly_exact(np.eye(9, dtype=int))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_char_poly_matches_numpy_roots(n, seed):
    rng = np.random.default_rng(seed)
    q = rng.integers(-4, 5, size=(n, n))
    poly = char_poly_exact(q)
    assert poly.degree == n and poly.coefficients[0] == 1
    assert np.allclose(np.poly(q.astype(float)), poly.coefficients, atol=1e-6 * 10**n)
    # exact: p(Q) = 0 by Cayley-Hamilton
    acc = np.zeros((n, n), dtype=object)
    for c in poly.coefficients:
        acc = acc.dot(q.astype(object)) + c * np.eye(n, dtype=object)
    assert (acc == 0).all()


def test_int_polynomial_helpers():
    p = IntPolynomial((1, -2, 0, 3))
    assert p(Fraction(1, 2)) == Fraction(1, 8) - Fraction(1, 2) + 3
    assert p(2.0) == pytest.approx(3.0)
    assert p.derivative().coefficients == (3, -4, 0)
    assert str(p) == "x^3 - 2x^2 + 3"
    assert str(IntPolynomial((-1, 1))) == "-x + 1"


def test_numeric_rank():
    assert numeric_rank(np.eye(4)) == 4
    assert numeric_rank(np.ones((5, 5))) == 1
    for k in range(1, 11):
        m = all_pairs_distances(b_theta(k)) + 2 * np.eye(k + 4)
        assert numeric_rank(m) == 4


def test_cycle_matrix_eigs_close_form_all_values():
    # the full spectrum of C_n is known: eigenvalues of the circulant distance matrix
    for n in (6, 7):
        row = [min(j, n - j) for j in range(n)]
        want = sorted((sum(row[j] * math.cos(2 * math.pi * k * j / n) for j in range(n)) for k in range(n)), reverse=True)
        assert distance_spectrum(cycle_graph(n)).values == pytest.approx(want, abs=1e-9)
