from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanoplanes.bundles import (
    Q,
    S,
    S_DUAL,
    GradedClass,
    UnsupportedBundle,
    canonical_and_expected_dim,
    chern_character,
    degree,
    fano_bundle,
    fano_class,
    fano_dimension,
    fano_tangent_chern,
    tangent_bundle,
    tangent_chern,
    todd,
    total_chern,
    trivial,
)
from fanoplanes.chow import ChowClass, GrassmannianContext, sigma
from oracles import chern_from_roots, end_roots, sym2_roots

GR310 = GrassmannianContext(3, 10)


def s(*parts):
    return sigma(GR310, *parts)


def test_c_s_dual():
    assert total_chern(S_DUAL, GR310).total() == 1 + s(1) + s(1, 1) + s(1, 1, 1)


def test_c_s_is_signed():
    assert total_chern(S, GR310).total() == 1 - s(1) + s(1, 1) - s(1, 1, 1)


def test_c_q_complete_homogeneous():
    c = total_chern(Q, GR310)
    assert [c[m] for m in range(1, 4)] == [s(1), s(2), s(3)]
    assert c[8] == 0


def test_sym2_chern():
    c = total_chern(S_DUAL.sym(2), GR310)
    assert c[1] == 4 * s(1)
    assert c[2] == 5 * s(2) + 10 * s(1, 1)
    assert c[3] == 2 * s(3) + 15 * s(2, 1) + 20 * s(1, 1, 1)
    assert c[4] == 6 * s(3, 1) + 10 * s(2, 2) + 30 * s(2, 1, 1)
    assert c[5] == 4 * s(3, 2) + 12 * s(3, 1, 1) + 20 * s(2, 2, 1)
    assert c[6] == 8 * s(3, 2, 1)
    assert c[7] == 0


def test_sym2_matches_elementary_basis_route():
    assert total_chern(S_DUAL.sym(2), GR310).total() == chern_from_roots(sym2_roots(3), GR310)


@pytest.mark.parametrize("k,n", [(2, 5), (3, 7), (3, 10)])
def test_tangent_matches_elementary_basis_route(k, n):
    ctx = GrassmannianContext(k, n)
    top = ctx.dim
    c_s = GradedClass.from_class(total_chern(S_DUAL, ctx).total(), top)
    c_end = GradedClass.from_class(chern_from_roots(end_roots(k), ctx), top)
    power = GradedClass.one(ctx, top)
    for _ in range(n):
        power = power * c_s
    assert tangent_chern(ctx).truncate(top) == power * c_end.inverse()


def test_tangent_chern_gr310():
    c = tangent_chern(GR310)
    assert c[1] == 10 * s(1)
    assert c[2] == 47 * s(2) + 51 * s(1, 1)
    assert c[3] == 140 * s(3) + 310 * s(2, 1) + 180 * s(1, 1, 1)


@pytest.mark.parametrize("k,n", [(k, n) for k in (2, 3, 4) for n in range(k + 1, 13) if k * (n - k) <= 27])
def test_c1_tangent_is_n_sigma1(k, n):
    ctx = GrassmannianContext(k, n)
    assert tangent_chern(ctx)[1] == n * sigma(ctx, 1)


def test_whitney_sum():
    a, b = S_DUAL.sym(2), Q
    assert total_chern(a + b, GR310) == total_chern(a, GR310) * total_chern(b, GR310)
    assert total_chern(S_DUAL + trivial(2), GR310) == total_chern(S_DUAL, GR310)


def test_euler_sequence():
    # S + Q = trivial of rank n
    c = total_chern(S + Q, GR310)
    assert c.total() == 1


def test_chern_character_tangent():
    ch = chern_character(tangent_bundle(), GR310, 3)
    assert ch[0] == 21
    assert ch[1] == 10 * s(1)
    assert ch[2] == 3 * s(2) - s(1, 1)
    third = Fraction(5, 3)
    assert ch[3] == third * s(3) - third * s(2, 1) + third * s(1, 1, 1)


@pytest.mark.parametrize("k,n", [(2, 6), (3, 8), (3, 10)])
def test_todd_low_degree_formula(k, n):
    ctx = GrassmannianContext(k, n)
    c = tangent_chern(ctx).truncate(3)
    td = todd(c, 3)
    c1, c2 = c[1], c[2]
    assert td[1] == c1 / 2
    assert td[2] == (c1 * c1 + c2) / 12
    assert td[3] == c1 * c2 / 24


def test_todd_degree4_formula():
    ctx = GrassmannianContext(3, 10)
    c = tangent_chern(ctx).truncate(4)
    c1, c2, c3, c4 = c[1], c[2], c[3], c[4]
    expected = (-c4 + c3 * c1 + 3 * c2 * c2 + 4 * c2 * c1 * c1 - c1 ** 4) / 720
    assert todd(c, 4)[4] == expected


def test_todd_of_projective_space_gives_chi_one():
    ctx = GrassmannianContext(1, 5)
    td = todd(tangent_chern(ctx), ctx.dim)
    assert td[ctx.dim].integrate() == 1


def test_fano_class_box_truncation():
    expected = 512 * (4 * s(7, 7, 4) + 8 * s(7, 6, 5) + 2 * s(6, 6, 6))
    assert fano_class(GR310, (2, 2, 2)) == expected


def test_fano_class_on_larger_box():
    ctx = GrassmannianContext(3, 12)
    t = lambda *p: sigma(ctx, *p)
    expected = 512 * (t(9, 6, 3) + 2 * t(9, 5, 4) + 2 * t(8, 7, 3) + 6 * t(8, 6, 4)
                      + 4 * t(8, 5, 5) + 4 * t(7, 7, 4) + 8 * t(7, 6, 5) + 2 * t(6, 6, 6))
    assert fano_class(ctx, (2, 2, 2)) == expected


def test_fano_points_on_gr39():
    ctx = GrassmannianContext(3, 9)
    assert fano_dimension(ctx, (2, 2, 2)) == 0
    assert fano_class(ctx, (2, 2, 2)).integrate() == 1024


def test_lines_on_cubic_surface():
    assert fano_class(GrassmannianContext(2, 4), (3,)).integrate() == 27


def test_lines_on_quintic_threefold():
    assert fano_class(GrassmannianContext(2, 5), (5,)).integrate() == 2875


def test_fano_class_rank_too_large():
    with pytest.raises(ValueError):
        fano_class(GrassmannianContext(3, 8), (2, 2, 2))


def test_degree_and_tangent():
    assert degree(GR310, (2, 2, 2)) == 11264
    c = fano_tangent_chern(GR310, (2, 2, 2))
    assert c[1] == -2 * s(1)
    assert c[2] == 8 * s(2) - 3 * s(1, 1)
    assert c[3] == -20 * s(3) - s(2, 1) + 8 * s(1, 1, 1)


def test_canonical_and_expected_dimension():
    assert [canonical_and_expected_dim(n) for n in (8, 9, 12)] == [(3, 0), (2, 3), (-1, 12)]
    with pytest.raises(ValueError):
        canonical_and_expected_dim(6)


def test_rank_and_str():
    e = fano_bundle((2, 2, 2))
    assert e.rank(GR310) == 18
    assert tangent_bundle().rank(GR310) == 21
    assert str(S_DUAL.sym(2))


def test_graded_inverse():
    c = total_chern(S_DUAL.sym(2), GR310).truncate(5)
    assert c * c.inverse() == GradedClass.one(GR310, 5)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 6))
def test_graded_json_round_trip(d, top):
    c = total_chern(S_DUAL.sym(d), GR310).truncate(top)
    assert GradedClass.from_json(c.to_json()) == c


def test_unsupported_bundle_is_value_error():
    assert issubclass(UnsupportedBundle, ValueError)
