import pytest

from distspec.canon import are_isomorphic
from distspec.errors import BadArgument
from distspec.families import (
    FamilyDescriptor,
    FamilyKind,
    b_family,
    b_inf,
    b_theta,
    bg_pq322,
    block_star,
    build,
    candidate_params,
    infinity_graph,
    k_split,
    membership,
    order_and_size,
    sp_t,
    star_plus,
    theta_graph,
    tri_pendant,
)
from distspec.graph import Graph, cycle_graph, path_graph, star_graph
from distspec.recognizers import BlockClass, classify_block_graph, cyclic_type, is_split
from distspec.spectra import EPS, HALF, lambda2

# (kind, params, expected order, expected size)
SIZES = [
    (FamilyKind.INFINITY, (3, 4, 0), 6, 7),
    (FamilyKind.INFINITY, (3, 3, 2), 7, 8),
    (FamilyKind.THETA, (2, 3, 4), 8, 9),
    (FamilyKind.B_FAMILY, (1, 2, 0, 1, 0), 9, 10),
    (FamilyKind.B_INF, (3,), 8, 9),
    (FamilyKind.B_THETA, (4,), 8, 9),
    (FamilyKind.SP_T, (2,), 7, 10),
    (FamilyKind.K_SPLIT, (4, (2, 1)), 7, 9),
    (FamilyKind.TRI_PENDANT, (2, 1, 0), 6, 6),
    (FamilyKind.BLOCK_STAR, ((3, 4, 2),), 7, 10),
    (FamilyKind.BG_PQ322, (3, 4), 10, 14),
    (FamilyKind.STAR_PLUS, (6,), 6, 6),
]


@pytest.mark.parametrize("kind, params, n, m", SIZES)
def test_order_and_size(kind, params, n, m):
    assert order_and_size(FamilyDescriptor(kind, params)) == (n, m)


def test_named_small_members():
    assert are_isomorphic(b_theta(0), theta_graph(2, 2, 1))
    assert are_isomorphic(k_split(2, (1, 1)), path_graph(4))
    assert are_isomorphic(k_split(2, (4,)), star_graph(6))
    assert are_isomorphic(b_family(0, 0, 0, 0, 0), infinity_graph(3, 3, 0))
    assert are_isomorphic(b_family(1, 0, 0, 0, 0), infinity_graph(3, 3, 1))
    assert are_isomorphic(b_inf(0), infinity_graph(3, 3, 0))
    assert are_isomorphic(block_star((2, 2, 2)), star_graph(4))
    assert are_isomorphic(star_plus(3), cycle_graph(3))
    assert are_isomorphic(tri_pendant(1, 1, 0), tri_pendant(0, 1, 1))


def test_btheta_layout():
    g = b_theta(3)
    assert g.degree(0) == 6 and g.degree(1) == 3
    assert g.degree(2) == g.degree(3) == 2 and not g.has_edge(2, 3)
    assert all(g.degree(v) == 1 for v in range(4, 7))


def test_spt_layout():
    g = sp_t(2)
    assert all(g.has_edge(u, v) for u in range(4) for v in range(u + 1, 4))
    assert g.neighbors(4) == [0, 1]
    assert g.degree(0) == 6 and g.neighbors(5) == [0]
    assert is_split(g)[0]


def test_infinity_and_theta_types():
    assert str(cyclic_type(infinity_graph(3, 5, 2))) == "bicyclic(infinity)"
    assert str(cyclic_type(theta_graph(2, 3, 3))) == "bicyclic(theta)"
    assert str(cyclic_type(b_theta(4))) == "bicyclic(theta)"


@pytest.mark.parametrize(
    "ctor, args",
    [
        (theta_graph, (1, 1, 2)),
        (theta_graph, (0, 2, 2)),
        (infinity_graph, (2, 3, 0)),
        (b_family, (0, -1, 0, 0, 0)),
        (k_split, (1, ())),
        (k_split, (2, (1, 1, 1))),
        (tri_pendant, (1, 0, 0)),
        (block_star, ((1, 3),)),
        (bg_pq322, (1, 3)),
        (sp_t, (-1,)),
    ],
)
def test_bad_parameters(ctor, args):
    with pytest.raises(BadArgument):
        ctor(*args)


def test_membership_examples():
    assert membership(theta_graph(2, 2, 1), FamilyKind.B_THETA) == (0,)
    assert membership(cycle_graph(6), FamilyKind.B_FAMILY) is None
    assert membership(cycle_graph(6), FamilyKind.CYCLE) == (6,)
    assert membership(path_graph(4), FamilyKind.K_SPLIT) == (2, (1, 1))
    # two triangles joined by a path of length 2 plus a pendant at one free triangle vertex
    g = Graph.from_edges(8, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (4, 6), (1, 7)])
    assert membership(g, FamilyKind.B_FAMILY) == (2, 1, 0, 0, 0)


@pytest.mark.parametrize("kind", list(FamilyKind))
def test_membership_roundtrip(kind):
    seen = 0
    for n in range(2, 11):
        for m in range(n - 1, n * (n - 1) // 2 + 1):
            order = list(candidate_params(kind, n, m))
            for params in order:
                g = build(FamilyDescriptor(kind, params))
                assert (g.n, g.m) == (n, m)
                found = membership(g.relabel(list(reversed(range(n)))), kind)
                assert found is not None
                assert are_isomorphic(build(FamilyDescriptor(kind, found)), g)
                # the first isomorphic tuple in enumeration order wins
                assert order.index(found) <= order.index(params)
                seen += 1
    assert seen > 0


NEGATIVE_FAMILIES = [
    (FamilyKind.B_FAMILY, lambda n: candidate_params(FamilyKind.B_FAMILY, n, n + 1)),
    (FamilyKind.B_INF, lambda n: candidate_params(FamilyKind.B_INF, n, n + 1)),
    (FamilyKind.B_THETA, lambda n: candidate_params(FamilyKind.B_THETA, n, n + 1)),
    (FamilyKind.SP_T, lambda n: candidate_params(FamilyKind.SP_T, n, n + 3)),
    (FamilyKind.STAR_PLUS, lambda n: candidate_params(FamilyKind.STAR_PLUS, n, n)),
    (FamilyKind.BLOCK_STAR, None),
    (FamilyKind.BG_PQ322, None),
]


@pytest.mark.parametrize("kind, gen", NEGATIVE_FAMILIES, ids=[k.value for k, _ in NEGATIVE_FAMILIES])
def test_family_members_are_below_half(kind, gen):
    checked = 0
    for n in range(4, 13):
        if gen is None:
            params = [p for m in range(n - 1, n * (n - 1) // 2 + 1) for p in candidate_params(kind, n, m)]
        else:
            params = list(gen(n))
        for p in params:
            g = build(FamilyDescriptor(kind, p))
            if kind is FamilyKind.BLOCK_STAR and len(p[0]) == 1:
                continue  # a single clique is K_n, which sits at -1 anyway
            assert lambda2(g) < HALF - EPS, (kind, p)
            checked += 1
    assert checked > 0


def test_block_templates_classify():
    assert classify_block_graph(bg_pq322(3, 4)) is BlockClass.BG_PQ322_SUB
    assert classify_block_graph(block_star((3, 3, 2))) is BlockClass.BLOCK_STAR
    assert classify_block_graph(cycle_graph(4)) is BlockClass.NOT_BLOCK_GRAPH
