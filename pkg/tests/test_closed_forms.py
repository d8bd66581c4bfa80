"""Coefficient formulas, inversions, substituted closed forms, remainders."""

import random
from fractions import Fraction

import pytest

from permpoly.algebra import IntPoly
from permpoly import closed_forms as cf
from permpoly.graphs import (
    Complete,
    Cycle,
    Dumbbell,
    Lollipop,
    MatrixKind,
    Path,
    Theta,
    count_triangles,
    count_triangles_through_vertex,
    degree_stats,
    family_sweep,
    generate,
)
from permpoly.permanent import perm_poly

L = MatrixKind.LAPLACIAN
Q = MatrixKind.SIGNLESS_LAPLACIAN


def test_coeff_formulas_triangle():
    report = cf.coeff_formulas(generate(Cycle(3)), L)
    assert report.formula == (1, -6, 15, -12)
    assert report.all_match


def test_coeff_formulas_dumbbell_second_coefficient():
    # 2m^2 + m - sum(d^2)/2 with m = 8, sum(d^2) = 38
    report = cf.coeff_formulas(generate(Dumbbell(3, 3, 1)), L)
    assert report.formula[2] == 2 * 64 + 8 - 19 == 117
    assert report.all_match


def test_leading_coefficient_is_one_everywhere():
    for spec in (Path(1), Path(5), Cycle(6), Theta(0, 1, 2), Complete(5)):
        for kind in (L, Q):
            report = cf.coeff_formulas(generate(spec), kind)
            assert report.formula[0] == 1 and report.computed[0] == 1


def test_coeff_formulas_sweep():
    for spec in family_sweep(10):
        g = generate(spec)
        for kind in (L, Q):
            assert cf.coeff_formulas(g, kind).all_match


def test_triangle_interpretation_oracle():
    """The degree-weighted triangle term counts triangles through each
    vertex; counting triangles of the deleted graph instead breaks the
    degree-4 coefficient on these five graphs."""
    specs = [Complete(4), Theta(0, 1, 1), Theta(0, 1, 2), Lollipop(3, 4), Dumbbell(3, 3, 1)]
    for spec in specs:
        g = generate(spec)
        degs = g.degrees()
        c3 = count_triangles(g)
        through = sum(degs[v] * count_triangles_through_vertex(g, v) for v in range(g.n))
        deleted = sum(degs[v] * (c3 - count_triangles_through_vertex(g, v)) for v in range(g.n))
        for kind, sign in ((L, 1), (Q, -1)):
            actual = perm_poly(g, kind).coeff(g.n - 4)
            base = cf.coefficient_formulas(g, kind)[4] - sign * 2 * through
            assert base + sign * 2 * through == actual
            if through != deleted:
                assert base + sign * 2 * deleted != actual


def test_recoverable_invariants_examples():
    rec = cf.recoverable_invariants(IntPoly([-12, 15, -6, 1]), L)
    assert (rec.n, rec.m, rec.sum_d2) == (3, 3, 12)
    assert rec.degree_cube_triangle_mix == 24 - 6  # sum d^3 - 6 triangles for C_3

    rec = cf.recoverable_invariants(perm_poly(generate(Dumbbell(3, 3, 1)), L), L)
    assert rec.degree_cube_triangle_mix == 94 - 12

    rec = cf.recoverable_invariants(IntPoly([2, -2, 1]), L)
    assert (rec.n, rec.m, rec.sum_d2) == (2, 1, 2)
    assert rec.degree_cube_triangle_mix is None


def test_recoverable_invariants_roundtrip():
    rng = random.Random(5)
    pool = list(family_sweep(11))
    for spec in rng.sample(pool, 50):
        g = generate(spec)
        stats = degree_stats(g)
        c3 = count_triangles(g)
        for kind, sign in ((L, -1), (Q, 1)):
            rec = cf.recoverable_invariants(perm_poly(g, kind), kind)
            assert (rec.n, rec.m) == (g.n, g.m)
            if g.n >= 2:
                assert rec.sum_d2 == stats.sum_d2
            if g.n >= 3:
                assert rec.degree_cube_triangle_mix == stats.sum_d3 + sign * 6 * c3


def test_recoverable_invariants_rejects_unrealizable():
    with pytest.raises(cf.NonIntegralInversion):
        cf.recoverable_invariants(IntPoly([0, -3, 1]), L)  # odd linear coefficient


def test_pathlike_closed_forms():
    for tag in ("P", "B", "U", "C"):
        for kind in (L, Q):
            for n in range(3 if tag == "C" else 1, 13):
                assert cf.verify_pathlike_closed_form(tag, kind, n)


def test_pathlike_invalid_n():
    with pytest.raises(cf.InvalidN):
        cf.verify_pathlike_closed_form("C", L, 2)
    with pytest.raises(cf.InvalidN):
        cf.verify_pathlike_closed_form("P", L, 0)


def test_y1_anchors():
    assert cf.y1_value(Dumbbell(3, 3, 1), L) == 2
    assert cf.y1_value(Dumbbell(3, 3, 1), Q) == -6
    assert cf.y1_value(Theta(1, 1, 1), L) == 0
    assert cf.y1_value(Theta(1, 1, 1), Q) == 0


def test_y1_path_cycle_formulas():
    for n in range(1, 10):
        assert cf.y1_value(Path(n), L) == 2 == cf.y1_value(Path(n), Q)
    for n in range(3, 10):
        assert cf.y1_value(Cycle(n), L) == (-1) ** n + 3
        assert cf.y1_value(Cycle(n), Q) == 3 * (-1) ** n + 1


def test_y1_matches_polynomial_evaluation():
    for spec in (Path(6), Cycle(5), Cycle(6), Dumbbell(3, 4, 0), Theta(0, 2, 2), Theta(1, 2, 3)):
        g = generate(spec)
        for kind in (L, Q):
            assert cf.y1_value(spec, kind) == perm_poly(g, kind)(2)


def test_y1_unsupported_family():
    with pytest.raises(cf.UnsupportedFamily):
        cf.y1_value(Complete(4), L)


def test_residual_reconstruction_anchor():
    res = cf.residual(Dumbbell(3, 3, 1), L)
    assert res.value_at_one == 2
    assert Fraction(res.remainder_at_one + cf.base_series("dumbbell", 7).eval_at_one(), 8) == 2


def test_residual_theta_111_leading_term():
    res = cf.residual(Theta(1, 1, 1), L)
    # All three path lengths coincide, so the three top candidates pile up
    # on one exponent: 2 * 3 = 6 at y^12.
    assert res.leading_term == (12, 6)
    assert dict(res.candidates)[12] == 6
    assert res.structure_ok


def test_residual_symmetric_under_cycle_swap():
    a = cf.residual(Dumbbell(3, 5, 2), L)
    b = cf.residual(Dumbbell(5, 3, 2), L)
    assert a.remainder == b.remainder


def test_residual_sweep_small():
    for spec in (Dumbbell(3, 3, 0), Dumbbell(3, 4, 1), Dumbbell(4, 4, 0),
                 Theta(0, 1, 2), Theta(1, 1, 2), Theta(2, 2, 2)):
        for kind in (L, Q):
            res = cf.residual(spec, kind)
            assert res.value_at_one == cf.y1_value(spec, kind)
            assert res.structure_ok
            assert all(res.remainder.coeff(e) == 0 for e in range(3))


def test_residual_rejects_other_families():
    with pytest.raises(cf.UnsupportedFamily):
        cf.residual(Cycle(5), L)


def test_family_injectivity_examples():
    assert cf.family_injectivity_check("dumbbell", 8, L)
    assert cf.family_injectivity_check("theta", 7, Q)
    assert cf.family_injectivity_check("theta", 5, L)


def test_injectivity_sweep():
    for n in range(6, 12):
        for family in ("dumbbell", "theta"):
            for kind in (L, Q):
                assert cf.family_injectivity_check(family, n, kind)
