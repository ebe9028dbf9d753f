"""Riemann-Roch and Hodge-theoretic invariants of the Fano scheme of planes.

All integrals over F are computed on the Grassmannian against [F]. Results of
Riemann-Roch must come out integral; anything else means a bug upstream and
raises ``IntegralityError``.

The closed form (2^7 * 11 / 3)(m - 1)(5 (m - 1)^2 - 2) for the Hilbert
polynomial is wrong: it gives -1408 and 1408 at m = 0 and m = 2 instead of
chi(O) = -2816 and chi(O(2)) = 2816. ``hilbert_polynomial`` returns the cubic
interpolating the Riemann-Roch values, which for planes on three quadrics in
P^9 is (2^8 * 11 / 3)(m - 1)(2 (m - 1)^2 + 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .bundles import (
    GradedClass,
    chern_character_from_total,
    fano_class,
    fano_dimension,
    fano_tangent_chern,
    graded_exp,
    todd,
)
from .chow import ChowClass, GrassmannianContext

PICARD_RANK_ONE = "picard_rank_one"
CYLINDER_INJECTIVE = "cylinder_map_injective"


class IntegralityError(ArithmeticError):
    pass


class InconsistencyError(ArithmeticError):
    pass


def _as_int(x, what: str) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise IntegralityError(f"{what} = {x} is not an integer")
    return int(x)


@dataclass(frozen=True, eq=False)
class ThreefoldInvariants:
    """Chern data of F = zero locus of a section of sum Sym^{d_i}(S*)."""

    context: GrassmannianContext
    degrees: tuple[int, ...]
    fano: ChowClass = field(repr=False)
    tangent: GradedClass = field(repr=False)

    @property
    def dim(self) -> int:
        return fano_dimension(self.context, self.degrees)

    @property
    def hyperplane(self) -> ChowClass:
        return ChowClass.schubert(self.context, (1,))

    def integrate(self, a: ChowClass) -> Fraction:
        """int_F a, pushed forward to the Grassmannian."""
        return Fraction((a.degree_part(self.dim) * self.fano).integrate())

    def __post_init__(self):
        # chi(O) must be integral on threefolds; check it once up front
        if self.dim == 3:
            c1c2 = self.tangent[1] * self.tangent[2]
            _as_int(self.integrate(c1c2) / 24, "int c1 c2 / 24")


@lru_cache(maxsize=None)
def threefold_invariants(ctx: GrassmannianContext = GrassmannianContext(3, 10),
                         degrees: tuple[int, ...] = (2, 2, 2)) -> ThreefoldInvariants:
    degrees = tuple(degrees)
    fdim = fano_dimension(ctx, degrees)
    if fdim < 0:
        raise ValueError("the zero locus is empty for dimension reasons")
    return ThreefoldInvariants(
        context=ctx,
        degrees=degrees,
        fano=fano_class(ctx, degrees),
        tangent=fano_tangent_chern(ctx, degrees, max_degree=fdim),
    )


def _todd(inv: ThreefoldInvariants) -> GradedClass:
    return todd(inv.tangent, inv.dim)


def _line_bundle_ch(inv: ThreefoldInvariants, m: int) -> GradedClass:
    h = GradedClass.from_class(inv.hyperplane * m, inv.dim)
    return graded_exp(h)


def hrr_chi(inv: ThreefoldInvariants, m: int) -> int:
    """chi(F, O(m)) by Hirzebruch-Riemann-Roch."""
    integrand = _line_bundle_ch(inv, m) * _todd(inv)
    return _as_int(inv.integrate(integrand[inv.dim]), f"chi(O({m}))")


def hilbert_polynomial(inv: ThreefoldInvariants) -> tuple[Fraction, ...]:
    """Coefficients (constant term first) of m -> chi(O(m)).

    Lagrange interpolation through m = 0..dim; the leading coefficient is
    checked against deg F / dim!.
    """
    d = inv.dim
    xs = list(range(d + 1))
    ys = [hrr_chi(inv, m) for m in xs]
    coeffs = [Fraction(0)] * (d + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t in range(d + 1):
            coeffs[t] += yi * basis[t] / denom
    deg = inv.integrate(inv.hyperplane ** d)
    fact = 1
    for j in range(2, d + 1):
        fact *= j
    if coeffs[d] != deg / fact:
        raise InconsistencyError(f"leading coefficient {coeffs[d]} != deg/{d}! = {deg / fact}")
    return tuple(coeffs)


def evaluate(coeffs: Sequence[Fraction], m) -> Fraction:
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * m + c
    return out


def chi_cotangent(inv: ThreefoldInvariants) -> int:
    """chi(Omega^1_F) = int ch(Omega^1) td(T_F)."""
    ch_t = chern_character_from_total(inv.tangent, inv.dim)
    ch_omega = ch_t.dual()
    integrand = ch_omega * _todd(inv)
    return _as_int(inv.integrate(integrand[inv.dim]), "chi(Omega^1)")


def chi_topological(inv: ThreefoldInvariants) -> int:
    return _as_int(inv.integrate(inv.tangent[inv.dim]), "c_top(T_F)")


def degree(inv: ThreefoldInvariants) -> int:
    return _as_int(inv.integrate(inv.hyperplane ** inv.dim), "degree")


def canonical_cube(inv: ThreefoldInvariants) -> int:
    k = -inv.tangent[1]
    return _as_int(inv.integrate(k ** inv.dim), "K^dim")


@dataclass(frozen=True)
class CompleteIntersectionHodge:
    n: int
    euler: int
    middle: tuple[int, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "euler": self.euler, "middle": list(self.middle)}


def ci_hodge(n: int) -> CompleteIntersectionHodge:
    """Euler number and middle Hodge numbers of X = three quadrics in P^n."""
    if n < 4:
        raise ValueError("need n >= 4")
    if n % 2 == 0:
        m = n // 2
        h = 2 * m * m - m - 1
        return CompleteIntersectionHodge(n, -4 * m * (m - 1), (h, h))
    m = (n + 1) // 2
    outer = comb(m - 1, 2)
    return CompleteIntersectionHodge(n, 4 * m * (m - 1), (outer, 3 * m * m - 3 * m + 2, outer))


def surface_rr(d_squared: int, d_dot_k: int, chi_o: int) -> int:
    """chi(O(D)) on a surface: (D^2 - D.K)/2 + chi(O)."""
    if (d_squared - d_dot_k) % 2:
        raise ValueError("D^2 - D.K must be even")
    return (d_squared - d_dot_k) // 2 + chi_o


def gram_discriminant(g11: int, g12: int, g22: int) -> int:
    return g11 * g22 - g12 * g12


@dataclass(frozen=True)
class HodgeDiamond:
    """h[p][q] = dim H^q(Omega^p) of a threefold."""

    h: tuple[tuple[int, ...], ...]
    assumptions: tuple[str, ...] = ()

    def __post_init__(self):
        for p in range(4):
            for q in range(4):
                if self.h[p][q] < 0:
                    raise ValueError("Hodge numbers are nonnegative")
                if self.h[p][q] != self.h[q][p] or self.h[p][q] != self.h[3 - p][3 - q]:
                    raise ValueError("Hodge symmetry violated")

    def rows(self) -> list[list[int]]:
        """The upper half of the diamond, row by row: (h00), (h10 h01), ..."""
        return [[self.h[d - q][q] for q in range(d + 1)] for d in range(4)]

    def chi(self, p: int) -> int:
        return sum((-1) ** q * self.h[p][q] for q in range(4))

    def euler(self) -> int:
        return sum((-1) ** (p + q) * self.h[p][q] for p in range(4) for q in range(4))

    def to_json(self) -> dict:
        return {"h": [list(r) for r in self.h], "rows": self.rows(),
                "assumptions": list(self.assumptions)}

    def format(self) -> str:
        full = [[self.h[p][d - p] for p in range(max(0, d - 3), min(3, d) + 1)] for d in range(7)]
        cells = [" ".join(f"{x:^7}" for x in row) for row in full]
        width = max(len(c) for c in cells)
        return "\n".join(c.center(width).rstrip() for c in cells)


def hodge_diamond(chi_o: int, h02: int, chi_omega1: int, chi_top: int,
                  x_middle: Sequence[int], picard_rank: int = 1,
                  h01: int = 0) -> HodgeDiamond:
    """Assemble the Hodge diamond of the threefold F.

    H^2 of F is the primitive middle cohomology of X, Tate-twisted, plus the
    algebraic classes; so h20 is the outer middle number of X and h11 is the
    primitive central one plus the Picard rank. The rest follows from the
    holomorphic Euler characteristics.
    """
    outer, centre = x_middle[0], x_middle[len(x_middle) // 2]
    if outer != h02:
        raise InconsistencyError(f"h^{{2,0}} from X is {outer}, from cohomology of O it is {h02}")
    h10 = h01
    h11 = centre - 1 + picard_rank
    h03 = -(chi_o - 1 + h01 - h02)
    h13 = h02
    h12 = chi_omega1 - h10 + h11 + h13
    h = (
        (1, h01, h02, h03),
        (h10, h11, h12, h13),
        (h02, h12, h11, h10),
        (h03, h13, h01, 1),
    )
    diamond = HodgeDiamond(h, (PICARD_RANK_ONE, CYLINDER_INJECTIVE))
    if diamond.euler() != chi_top:
        raise InconsistencyError(f"diamond gives chi_top = {diamond.euler()}, expected {chi_top}")
    if diamond.chi(0) != chi_o or diamond.chi(1) != chi_omega1:
        raise InconsistencyError("diamond does not reproduce the holomorphic Euler characteristics")
    return diamond
