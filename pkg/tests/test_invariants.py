from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fanoplanes.chow import GrassmannianContext
from fanoplanes.invariants import (
    CYLINDER_INJECTIVE,
    PICARD_RANK_ONE,
    HodgeDiamond,
    InconsistencyError,
    canonical_cube,
    chi_cotangent,
    chi_topological,
    ci_hodge,
    degree,
    evaluate,
    gram_discriminant,
    hilbert_polynomial,
    hodge_diamond,
    hrr_chi,
    surface_rr,
    threefold_invariants,
)


@pytest.fixture(scope="module")
def inv():
    return threefold_invariants()


def test_dimension(inv):
    assert inv.dim == 3


@pytest.mark.parametrize("m,chi", [(0, -2816), (1, 0), (2, 2816), (3, 16896)])
def test_hrr_values(inv, m, chi):
    assert hrr_chi(inv, m) == chi


def test_serre_duality(inv):
    # K = O(2) and dim 3: chi(O(m)) = -chi(O(2 - m))
    for m in range(-3, 6):
        assert hrr_chi(inv, m) == -hrr_chi(inv, 2 - m)


def test_other_invariants(inv):
    assert chi_cotangent(inv) == 15616
    assert chi_topological(inv) == -36864
    assert degree(inv) == 11264
    assert canonical_cube(inv) == 90112


def test_hilbert_polynomial_closed_form(inv):
    coeffs = hilbert_polynomial(inv)
    assert coeffs == (Fraction(-2816), Fraction(19712, 3), Fraction(-5632), Fraction(5632, 3))
    for m in range(-5, 11):
        closed = Fraction(2 ** 8 * 11, 3) * (m - 1) * (2 * (m - 1) ** 2 + 1)
        assert evaluate(coeffs, m) == closed


@given(st.integers(-5, 10))
def test_hilbert_polynomial_matches_hrr(m):
    inv = threefold_invariants()
    assert evaluate(hilbert_polynomial(inv), m) == hrr_chi(inv, m)


def test_wrong_closed_form_differs(inv):
    wrong = lambda m: Fraction(2 ** 7 * 11, 3) * (m - 1) * (5 * (m - 1) ** 2 - 2)
    assert wrong(0) != hrr_chi(inv, 0) and wrong(2) != hrr_chi(inv, 2)
    assert wrong(1) == hrr_chi(inv, 1)


def test_points_of_gr39_have_chi_equal_to_count():
    inv = threefold_invariants(GrassmannianContext(3, 9), (2, 2, 2))
    assert inv.dim == 0
    assert hrr_chi(inv, 0) == 1024


def test_fano_surface_of_cubic_threefold():
    # lines on a cubic threefold: h10 = 5, h20 = 10
    inv = threefold_invariants(GrassmannianContext(2, 5), (3,))
    assert inv.dim == 2
    assert hrr_chi(inv, 0) == 6


@pytest.mark.parametrize("n,middle", [(4, (5, 5)), (5, (1, 20, 1)), (6, (14, 14)), (7, (3, 38, 3)),
                                      (8, (27, 27)), (9, (6, 62, 6)), (10, (44, 44))])
def test_ci_hodge_table(n, middle):
    assert ci_hodge(n).middle == middle


@pytest.mark.parametrize("n", range(4, 16))
def test_ci_hodge_lefschetz_parity(n):
    res = ci_hodge(n)
    dim = n - 3
    if dim % 2:
        assert res.euler == (dim + 1) - sum(res.middle)
    else:
        assert res.euler == dim + sum(res.middle)


def test_ci_hodge_rejects_small_n():
    with pytest.raises(ValueError):
        ci_hodge(3)


def test_surface_lattice_helpers():
    assert surface_rr(10, 12, 4) == 3
    assert gram_discriminant(2, 7, 9) == -31
    assert gram_discriminant(8, 1, 4) == 31
    with pytest.raises(ValueError):
        surface_rr(1, 0, 0)


def test_hodge_diamond(inv):
    d = hodge_diamond(hrr_chi(inv, 0), 6, chi_cotangent(inv), chi_topological(inv), ci_hodge(9).middle)
    assert d.rows() == [[1], [0, 0], [6, 62, 6], [2823, 15684, 15684, 2823]]
    assert d.euler() == -36864
    assert d.chi(0) == -2816 and d.chi(1) == 15616
    assert set(d.assumptions) == {PICARD_RANK_ONE, CYLINDER_INJECTIVE}


def test_hodge_diamond_inconsistent_h20(inv):
    with pytest.raises(InconsistencyError):
        hodge_diamond(hrr_chi(inv, 0), 5, chi_cotangent(inv), chi_topological(inv), ci_hodge(9).middle)


def test_hodge_diamond_symmetry_enforced():
    with pytest.raises(ValueError):
        HodgeDiamond(((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
