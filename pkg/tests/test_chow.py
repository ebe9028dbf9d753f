from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanoplanes.chow import (
    ChowClass,
    GrassmannianContext,
    chow_multiply,
    complement,
    format_class,
    integrate,
    sigma,
)
from fanoplanes.partitions import Partition

GR310 = GrassmannianContext(3, 10)
GR39 = GrassmannianContext(3, 9)


def test_context():
    assert GR310.dim == 21 and GR310.width == 7
    assert GR310.point() == (7, 7, 7)
    with pytest.raises(ValueError):
        GrassmannianContext(5, 4)


def test_box_violation():
    with pytest.raises(ValueError):
        ChowClass.schubert(GR310, (8,))
    with pytest.raises(ValueError):
        ChowClass.schubert(GR310, (1, 1, 1, 1))


def test_sigma1_cubed():
    assert sigma(GR310, 1) ** 3 == sigma(GR310, 3) + 2 * sigma(GR310, 2, 1) + sigma(GR310, 1, 1, 1)


def test_truncation_drops_outside_box():
    ctx = GrassmannianContext(2, 4)
    assert sigma(ctx, 2) * sigma(ctx, 1) == sigma(ctx, 2, 1)
    assert sigma(ctx, 2, 2) * sigma(ctx, 1) == 0


def test_fano_square_on_gr39():
    c = 512 * sigma(GR39, 3, 2, 1) ** 3
    assert integrate(c) == 1024


def test_lines_on_quintic_style_count():
    # sigma_1^4 on Gr(2,4): lines meeting four general lines
    assert integrate(sigma(GrassmannianContext(2, 4), 1) ** 4) == 2


@pytest.mark.parametrize("ctx", [GR39, GR310], ids=["Gr(3,9)", "Gr(3,10)"])
def test_poincare_duality(ctx):
    for d in range(ctx.dim + 1):
        basis = ctx.basis(d)
        for lam in basis:
            for mu in ctx.basis(ctx.dim - d):
                expected = 1 if mu == complement(lam, ctx) else 0
                assert integrate(sigma(ctx, *lam) * sigma(ctx, *mu)) == expected


def test_complement():
    assert complement((3, 1), GR310) == (7, 6, 4)
    assert complement((), GR310) == (7, 7, 7)


def test_integrate_only_sees_point():
    assert integrate(sigma(GR310, 7, 7, 6)) == 0
    assert integrate(3 * sigma(GR310, 7, 7, 7) + sigma(GR310, 1)) == 3


def test_rational_coefficients():
    a = sigma(GR310, 1) / 3
    assert a.coefficient((1,)) == Fraction(1, 3)
    assert (a * 3) == sigma(GR310, 1)


def test_context_mismatch():
    with pytest.raises(ValueError):
        chow_multiply(sigma(GR39, 1), sigma(GR310, 1))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7)), min_size=1, max_size=3),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_json_round_trip(parts, coeffs):
    c = ChowClass.zero(GR310)
    for p, x in zip(parts, coeffs):
        c = c + ChowClass.schubert(GR310, sorted(p, reverse=True), Fraction(x, 3))
    assert ChowClass.from_json(c.to_json()) == c


def test_format_class():
    c = sigma(GR310, 2, 1) - 2 - Fraction(5, 3) * sigma(GR310, 3)
    assert format_class(c) == "-(5/3)*s(3) + s(2,1) - 2"


def test_to_json_shape():
    assert (2 * sigma(GR310, 1)).to_json() == {
        "grassmannian": [3, 10], "terms": [{"partition": [1], "coeff": 2}]}
    assert Partition((1,)).to_json() == [1]
