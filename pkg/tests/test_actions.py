from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import in_domain, point_pairs, point_triples, points, rationals
from ybx.actions import (
    ActionReport,
    Grid,
    _b_coefficients,
    b_symmetry_check,
    braid_check,
    col_action,
    commutation_check,
    involutivity_check,
    j_map,
    j_map_inverse,
    plain_swap,
    qybe_check,
    rho_conjugation_check,
    row_action,
    sigma_generator,
    star_formula_check,
)
from ybx.errors import DimensionMismatch, IndexOutOfRange, OutsideDomain
from ybx.rmatrix import TorusPoint, apply_R, f_map

x0, y0 = TorusPoint.of(1, 2), TorusPoint.of(3, 5)
XP, YP = TorusPoint.of(Fraction(5, 6), Fraction(12, 5)), TorusPoint.of(Fraction(18, 5), Fraction(25, 6))


@st.composite
def tuples(draw, min_N=2, max_N=5, max_n=4):
    N = draw(st.integers(min_N, max_N))
    n = draw(st.integers(1, max_n))
    return tuple(draw(points(n)) for _ in range(N))


@st.composite
def grids(draw, max_side=4):
    n = draw(st.integers(2, max_side))
    m = draw(st.integers(2, max_side))
    rows = draw(st.lists(st.lists(rationals, min_size=m, max_size=m), min_size=n, max_size=n))
    return Grid(tuple(tuple(r) for r in rows))


# -- reports ------------------------------------------------------------------


def test_report_invariant():
    assert ActionReport.ok() and ActionReport.ok().identity is None
    bad = ActionReport.fail("x = y", 1, 2, (3,))
    assert not bad and bad.indices == (3,)
    with pytest.raises(ValueError):
        ActionReport(True, "named")
    with pytest.raises(ValueError):
        ActionReport(False)


# -- tuples -------------------------------------------------------------------


def test_sigma_on_running_example():
    assert sigma_generator((x0, y0), 1) == (YP, XP)
    assert plain_swap((x0, y0), 1) == (y0, x0)


def test_sigma_is_involution_on_example():
    assert sigma_generator(sigma_generator((x0, y0), 1), 1) == (x0, y0)


def test_sigma_index_and_shape_errors():
    with pytest.raises(IndexOutOfRange):
        sigma_generator((x0, y0), 2)
    with pytest.raises(IndexOutOfRange):
        sigma_generator((x0, y0), 0)
    with pytest.raises(DimensionMismatch):
        sigma_generator((x0, TorusPoint.of(1)), 1)
    with pytest.raises(DimensionMismatch):
        j_map(())


def test_j_map_small():
    assert j_map((x0,)) == (x0,)
    assert j_map((x0, y0)) == (XP, y0)


def test_j_map_three_points_by_hand():
    z = TorusPoint.of(2, 7)
    assert j_map((x0, y0, z)) == (f_map(f_map(x0, y0), z), f_map(y0, z), z)


@given(tuples())
def test_j_map_round_trip(ts):
    us = in_domain(j_map, ts)
    assert in_domain(j_map_inverse, us) == ts


def test_rho_conjugation_example():
    assert rho_conjugation_check((x0, y0, TorusPoint.of(2, 7)), 1)
    assert rho_conjugation_check((x0, y0, TorusPoint.of(2, 7)), 2)


@given(tuples(), st.data())
def test_rho_conjugation_property(ts, data):
    i = data.draw(st.integers(1, len(ts) - 1))
    assert in_domain(rho_conjugation_check, ts, i)


@given(tuples(min_N=3))
def test_braid_relation(ts):
    for i in range(1, len(ts) - 1):
        assert in_domain(braid_check, ts, i)


@given(tuples(min_N=4, max_N=5, max_n=3))
def test_distant_generators_commute(ts):
    def both(first, second):
        return sigma_generator(sigma_generator(ts, first), second)

    assert in_domain(both, 1, 3) == in_domain(both, 3, 1)


@given(tuples(max_N=4))
def test_sigma_involution(ts):
    once = in_domain(sigma_generator, ts, 1)
    assert in_domain(sigma_generator, once, 1) == ts


# -- points -------------------------------------------------------------------


def test_qybe_and_involutivity_examples():
    assert involutivity_check(x0, y0)
    assert qybe_check(x0, y0, TorusPoint.of(2, 7))


@given(point_pairs())
def test_involutivity_property(pair):
    assert in_domain(involutivity_check, *pair)


@given(point_triples())
def test_qybe_property(triple):
    assert in_domain(qybe_check, *triple)


# -- grids --------------------------------------------------------------------

G0 = Grid(((1, 2), (3, 5)))


def test_grid_accessors():
    g = Grid(((1, 2, 3), (4, 5, 6)))
    assert (g.n, g.m) == (2, 3)
    assert g.row(2) == TorusPoint.of(4, 5, 6)
    assert g.col(3) == TorusPoint.of(3, 6)
    with pytest.raises(OutsideDomain):
        Grid(((1, 0), (1, 1)))
    with pytest.raises(DimensionMismatch):
        Grid(((1, 2), (3,)))


def test_row_and_col_actions_example():
    assert row_action(G0, 1) == Grid(((Fraction(18, 5), Fraction(25, 6)), (Fraction(5, 6), Fraction(12, 5))))
    p, q = G0.col(1), G0.col(2)
    pp, qp = apply_R(p, q)
    assert col_action(G0, 1) == G0.with_cols(1, qp, pp)
    with pytest.raises(IndexOutOfRange):
        row_action(G0, 2)
    with pytest.raises(IndexOutOfRange):
        col_action(G0, 2)


def test_commutation_and_star_examples():
    assert commutation_check(G0, 1, 1)
    assert star_formula_check(G0, 1, 1)
    assert row_action(G0, 1).entries[0][0] == Fraction(18, 5)


@given(grids())
def test_grid_actions_are_involutions(g):
    once = in_domain(row_action, g, 1)
    assert in_domain(row_action, once, 1) == g
    once = in_domain(col_action, g, 1)
    assert in_domain(col_action, once, 1) == g


@given(grids(), st.data())
def test_commutation_property(g, data):
    i = data.draw(st.integers(1, g.m - 1))
    j = data.draw(st.integers(1, g.n - 1))
    assert in_domain(commutation_check, g, i, j)


@given(grids(), st.data())
def test_star_formulas_property(g, data):
    i = data.draw(st.integers(1, g.m - 1))
    j = data.draw(st.integers(1, g.n - 1))
    report = in_domain(star_formula_check, g, i, j)
    assert report, report


# -- B operator ---------------------------------------------------------------


def test_b_coefficients_example():
    op, closed = _b_coefficients((1, 2, 6), (1, 3, 15))
    assert op == closed
    assert closed[0] == 12
    assert b_symmetry_check((1, 2, 6), (1, 3, 15))


def test_b_degenerate_and_bad_windows():
    with pytest.raises(OutsideDomain):
        b_symmetry_check((1, 2, 6), (1, 2, 6))
    with pytest.raises(DimensionMismatch):
        b_symmetry_check((1, 2), (1, 3))
    with pytest.raises(OutsideDomain):
        b_symmetry_check((1, 0, 6), (1, 3, 15))


@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3))
def test_b_symmetry_property(Xw, Yw):
    assert in_domain(b_symmetry_check, Xw, Yw)
