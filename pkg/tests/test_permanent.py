"""Permanent evaluators and the polynomial routes."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permpoly.algebra import IntPoly
from permpoly.graphs import (
    CompleteBipartite,
    Cycle,
    Dumbbell,
    MatrixKind,
    Path,
    Theta,
    build_matrix,
    disjoint_union,
    family_sweep,
    generate,
)
from permpoly.permanent import (
    TooLarge,
    _permanent_half,
    characteristic_shift,
    perm_poly,
    perm_poly_matrix,
    permanent_naive,
    permanent_ryser,
)

L = MatrixKind.LAPLACIAN
Q = MatrixKind.SIGNLESS_LAPLACIAN


def test_naive_examples():
    assert permanent_naive(((1, 1), (1, 1))) == 2
    # x*I - L(C_3) at x = 2
    assert permanent_naive(((0, 1, 1), (1, 0, 1), (1, 1, 0))) == 2
    assert permanent_naive(build_matrix(generate(Cycle(3)), L)) == 12


def test_ryser_examples():
    assert permanent_ryser(((1, 2), (3, 4))) == 10
    q3 = build_matrix(generate(Cycle(3)), Q)
    assert permanent_ryser(q3) == 16
    assert permanent_ryser(characteristic_shift(q3, 2)) == -2


def test_empty_and_single():
    assert permanent_naive(()) == 1
    assert permanent_ryser(()) == 1
    assert _permanent_half(((5,),)) == 5


def test_size_guards():
    big = tuple(tuple(0 for _ in range(10)) for _ in range(10))
    with pytest.raises(TooLarge):
        permanent_naive(big)
    huge = tuple(tuple(0 for _ in range(31)) for _ in range(31))
    with pytest.raises(TooLarge):
        permanent_ryser(huge)
    with pytest.raises(TooLarge):
        perm_poly(generate(Path(23)), L)
    with pytest.raises(TooLarge):
        perm_poly(generate(Path(13)), L, "ryser-poly")


def test_oracle_equivalence_200_random():
    rng = random.Random(20240831)
    for _ in range(200):
        n = rng.randint(1, 7)
        m = tuple(tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(n))
        expected = permanent_naive(m)
        assert permanent_ryser(m) == expected
        assert _permanent_half(m) == expected


@given(st.integers(0, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n),
                       min_size=n, max_size=n)))
@settings(max_examples=120)
def test_oracle_equivalence_property(rows):
    m = tuple(tuple(row) for row in rows)
    assert permanent_ryser(m) == permanent_naive(m) == _permanent_half(m)


def test_perm_poly_examples():
    assert perm_poly(generate(Path(2)), L) == IntPoly([2, -2, 1])
    assert perm_poly(generate(Cycle(3)), L) == IntPoly([-12, 15, -6, 1])
    # (x-1)^2 (x-2) + 2(x-1) expanded
    assert perm_poly(generate(Path(3)), L) == IntPoly([-4, 7, -4, 1])


def test_perm_poly_routes_agree_small():
    for spec in (Path(4), Cycle(5), Dumbbell(3, 3, 1), Theta(0, 1, 2)):
        g = generate(spec)
        for kind in (L, Q):
            a = perm_poly(g, kind, "interpolation")
            b = perm_poly(g, kind, "ryser-poly")
            c = perm_poly(g, kind, "vertex-expansion")
            assert a == b == c


def test_monic_and_trace_coefficient():
    for spec in family_sweep(9):
        g = generate(spec)
        for kind in (L, Q):
            poly = perm_poly(g, kind)
            assert poly.degree == g.n
            assert poly.is_monic()
            assert poly.coeff(g.n - 1) == -2 * g.m


@pytest.mark.parametrize(
    "spec",
    [Path(5), Path(8), Cycle(4), Cycle(8), CompleteBipartite(2, 3),
     CompleteBipartite(3, 4), Theta(1, 1, 3), Theta(2, 2, 2), Dumbbell(4, 4, 2)],
)
def test_bipartite_identity(spec):
    g = generate(spec)
    assert g.is_bipartite()
    assert perm_poly(g, L) == perm_poly(g, Q)


def test_union_multiplicativity():
    rng = random.Random(7)
    pool = list(family_sweep(8))
    for _ in range(20):
        s1, s2 = rng.choice(pool), rng.choice(pool)
        g = disjoint_union(generate(s1), generate(s2))
        if g.n > 13:
            continue
        for kind in (L, Q):
            assert perm_poly_matrix(build_matrix(g, kind)) == perm_poly(generate(s1), kind) * perm_poly(generate(s2), kind)


def test_permanent_is_signed_constant_term():
    rng = random.Random(11)
    pool = list(family_sweep(9))
    for spec in rng.sample(pool, 20):
        g = generate(spec)
        for kind in (L, Q):
            m = build_matrix(g, kind)
            poly = perm_poly(g, kind)
            assert permanent_ryser(m) == (-1) ** g.n * poly(0)


def test_interpolation_concurrent_schedule_independent():
    # The evaluation points are independent; computing them in any order
    # must give the same polynomial (here: reversed order vs cached).
    g = generate(Dumbbell(3, 4, 1))
    m = build_matrix(g, L)
    from permpoly.algebra import lagrange_interpolate

    pts = [(k, _permanent_half(characteristic_shift(m, k))) for k in range(g.n, -1, -1)]
    assert lagrange_interpolate(pts) == perm_poly(g, L)
