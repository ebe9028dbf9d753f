"""Chern classes of tautological bundles on Gr(k, n) by the splitting principle.

Computations happen in the polynomial ring on the formal Chern roots
x_1, ..., x_k of S*, so c(S*) = prod(1 + x_i) and c(S) = prod(1 - x_i). A
symmetric polynomial is pushed into the Chow ring through its Schur
expansion, s_lam(x) -> sigma_lam, which is the ring map sending e_i(x) to
c_i(S*) = sigma_{1^i}; Schur functions with more than n - k columns die.

The quotient bundle Q has no roots in these variables. Its Chern classes are
c_m(Q) = h_m(x) for m <= n - k, which is all the tensor-product formula
c(L (x) F) = sum_m c_m(F) (1 + c_1 L)^(rank F - m) needs.

Integrals over the Fano scheme F = {s = 0} of a section of a bundle E use the
pushforward convention: int_F alpha = int_Gr alpha * [F], [F] = c_top(E).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb, factorial
from typing import Iterable, Optional, Sequence

from . import _poly
from .chow import ChowClass, Coeff, GrassmannianContext, _norm, coeff_to_json, format_class
from .partitions import Partition


class UnsupportedBundle(ValueError):
    pass


# -- graded classes ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GradedClass:
    """Degree-indexed Chow classes with exact rational coefficients.

    ``components[d]`` holds only weight-d Schubert classes; everything above
    ``max_degree`` is treated as truncated away.
    """

    context: GrassmannianContext
    components: tuple

    def __post_init__(self):
        for d, comp in enumerate(self.components):
            if comp.context != self.context:
                raise ValueError("component context mismatch")
            if comp.degrees() - {d}:
                raise ValueError(f"degree-{d} component has terms of other degrees")

    @classmethod
    def from_class(cls, a: ChowClass, max_degree: int) -> "GradedClass":
        return cls(a.context, tuple(a.degree_part(d) for d in range(max_degree + 1)))

    @classmethod
    def one(cls, ctx: GrassmannianContext, max_degree: int) -> "GradedClass":
        return cls.from_class(ChowClass.one(ctx), max_degree)

    @property
    def max_degree(self) -> int:
        return len(self.components) - 1

    def __getitem__(self, d: int) -> ChowClass:
        if 0 <= d < len(self.components):
            return self.components[d]
        return ChowClass.zero(self.context)

    def total(self) -> ChowClass:
        out = ChowClass.zero(self.context)
        for comp in self.components:
            out = out + comp
        return out

    def truncate(self, max_degree: int) -> "GradedClass":
        return GradedClass.from_class(self.total(), min(max_degree, self.max_degree))

    def _check(self, other: "GradedClass"):
        if self.context != other.context:
            raise ValueError(f"context mismatch: {self.context} vs {other.context}")

    def __add__(self, other: "GradedClass") -> "GradedClass":
        self._check(other)
        top = min(self.max_degree, other.max_degree)
        return GradedClass(self.context, tuple(self[d] + other[d] for d in range(top + 1)))

    def __neg__(self) -> "GradedClass":
        return GradedClass(self.context, tuple(-c for c in self.components))

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GradedClass):
            self._check(other)
            top = min(self.max_degree, other.max_degree)
            comps = []
            for d in range(top + 1):
                acc = ChowClass.zero(self.context)
                for i in range(d + 1):
                    if self[i] and other[d - i]:
                        acc = acc + self[i] * other[d - i]
                comps.append(acc)
            return GradedClass(self.context, tuple(comps))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GradedClass(self.context, tuple(c * other for c in self.components))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        top = max(self.max_degree, other.max_degree)
        return self.context == other.context and all(self[d] == other[d] for d in range(top + 1))

    def dual(self) -> "GradedClass":
        """Flip the sign of odd-degree parts (Chern classes of the dual bundle)."""
        return GradedClass(self.context, tuple(c * (-1) ** d for d, c in enumerate(self.components)))

    def inverse(self) -> "GradedClass":
        """Formal inverse of a class with degree-0 part 1, by the geometric series."""
        if self[0] != 1:
            raise ValueError("only classes with constant term 1 are invertible here")
        nil = self - GradedClass.one(self.context, self.max_degree)
        out = GradedClass.one(self.context, self.max_degree)
        term = GradedClass.one(self.context, self.max_degree)
        for _ in range(self.max_degree):
            term = term * (-nil)
            out = out + term
        return out

    def __repr__(self) -> str:
        parts = [f"[{d}] {format_class(c)}" for d, c in enumerate(self.components)]
        return f"GradedClass(Gr({self.context.k},{self.context.n}); " + "; ".join(parts) + ")"

    def to_json(self) -> dict:
        return {
            "grassmannian": self.context.to_json(),
            "components": [
                [{"partition": list(lam), "coeff": coeff_to_json(c)} for lam, c in comp.sorted_terms()]
                for comp in self.components
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GradedClass":
        ctx = GrassmannianContext(*map(int, data["grassmannian"]))
        return cls(ctx, tuple(ChowClass.from_terms_json(ctx, comp) for comp in data["components"]))


def graded_exp(x: GradedClass) -> GradedClass:
    """exp of a class with vanishing degree-0 part."""
    if x[0]:
        raise ValueError("exp needs a nilpotent argument")
    out = GradedClass.one(x.context, x.max_degree)
    term = GradedClass.one(x.context, x.max_degree)
    for j in range(1, x.max_degree + 1):
        term = term * x * Fraction(1, j)
        out = out + term
    return out


def power_sums(c: GradedClass, rank: int) -> list[ChowClass]:
    """Newton's identities: power sums of the Chern roots from the Chern classes."""
    ctx = c.context
    p = [ChowClass.one(ctx) * rank]
    for m in range(1, c.max_degree + 1):
        acc = c[m] * ((-1) ** (m - 1) * m)
        for i in range(1, m):
            if c[i] and p[m - i]:
                acc = acc + c[i] * p[m - i] * (-1) ** (i - 1)
        p.append(acc)
    return p


def chern_character_from_total(c: GradedClass, rank: int) -> GradedClass:
    p = power_sums(c, rank)
    return GradedClass(c.context, tuple(pm * Fraction(1, factorial(m)) for m, pm in enumerate(p)))


# -- bundle expressions -----------------------------------------------------

@dataclass(frozen=True)
class Bundle:
    """Formal expression over S, S*, Q, Q*, trivial bundles.

    ``a + b`` is the direct sum, ``a * b`` the tensor product.
    """

    op: str
    args: tuple = ()
    degree: int = 0

    def __add__(self, other: "Bundle") -> "Bundle":
        return Bundle("sum", (self, other))

    def __mul__(self, other: "Bundle") -> "Bundle":
        return Bundle("tensor", (self, other))

    def sym(self, d: int) -> "Bundle":
        return Bundle("sym", (self,), d)

    def wedge(self, d: int) -> "Bundle":
        return Bundle("wedge", (self,), d)

    def dual(self) -> "Bundle":
        return Bundle("dual", (self,))

    def rank(self, ctx: GrassmannianContext) -> int:
        op = self.op
        if op in ("S", "S*"):
            return ctx.k
        if op in ("Q", "Q*"):
            return ctx.width
        if op == "trivial":
            return self.degree
        if op == "sum":
            return sum(a.rank(ctx) for a in self.args)
        if op == "tensor":
            return self.args[0].rank(ctx) * self.args[1].rank(ctx)
        if op == "sym":
            return comb(self.args[0].rank(ctx) + self.degree - 1, self.degree)
        if op == "wedge":
            return comb(self.args[0].rank(ctx), self.degree)
        if op == "dual":
            return self.args[0].rank(ctx)
        raise UnsupportedBundle(f"unknown operation {op!r}")

    def __str__(self) -> str:
        op = self.op
        if op in ("S", "S*", "Q", "Q*"):
            return op
        if op == "trivial":
            return f"O^{self.degree}"
        if op == "sum":
            return "(" + " + ".join(map(str, self.args)) + ")"
        if op == "tensor":
            return "(" + " x ".join(map(str, self.args)) + ")"
        if op == "dual":
            return f"({self.args[0]})*"
        return f"{op.capitalize()}^{self.degree}({self.args[0]})"


S = Bundle("S")
S_DUAL = Bundle("S*")
Q = Bundle("Q")
Q_DUAL = Bundle("Q*")


def trivial(r: int) -> Bundle:
    if r < 0:
        raise ValueError("rank must be nonnegative")
    return Bundle("trivial", (), r)


def direct_sum(*parts: Bundle) -> Bundle:
    if not parts:
        return trivial(0)
    return parts[0] if len(parts) == 1 else Bundle("sum", tuple(parts))


def tangent_bundle() -> Bundle:
    """T Gr = Hom(S, Q) = S* (x) Q."""
    return S_DUAL * Q


def fano_bundle(degrees: Sequence[int]) -> Bundle:
    """Direct sum of Sym^d(S*) over the given degrees."""
    return direct_sum(*(S_DUAL.sym(d) for d in degrees))


class _Split:
    def __init__(self, roots):
        self.roots = list(roots)

    @property
    def rank(self):
        return len(self.roots)


class _Unsplit:
    def __init__(self, rank, total):
        self.rank = rank
        self.total = total


def _root_total(roots, k, top):
    out = _poly.const(k, 1)
    for r in roots:
        if any(r):
            out = _poly.mul(out, _poly.add(_poly.const(k, 1), _poly.linear(r)), top)
    return out


def _as_total(b, k, top):
    return _root_total(b.roots, k, top) if isinstance(b, _Split) else b.total


def _realize(e: Bundle, ctx: GrassmannianContext):
    k, top = ctx.k, ctx.dim
    op = e.op
    if op in ("S", "S*"):
        sign = -1 if op == "S" else 1
        return _Split(tuple(sign * int(i == j) for j in range(k)) for i in range(k))
    if op in ("Q", "Q*"):
        total = {}
        for m in range(min(ctx.width, top) + 1):
            total = _poly.add(total, _poly.complete_homogeneous(k, m))
        if op == "Q*":
            total = _poly.sign_by_degree(total)
        return _Unsplit(ctx.width, total)
    if op == "trivial":
        return _Split([(0,) * k] * e.degree)
    if op == "dual":
        b = _realize(e.args[0], ctx)
        if isinstance(b, _Split):
            return _Split(tuple(-c for c in r) for r in b.roots)
        return _Unsplit(b.rank, _poly.sign_by_degree(b.total))
    if op == "sum":
        parts = [_realize(a, ctx) for a in e.args]
        if all(isinstance(b, _Split) for b in parts):
            return _Split(r for b in parts for r in b.roots)
        total = _poly.const(k, 1)
        for b in parts:
            total = _poly.mul(total, _as_total(b, k, top), top)
        return _Unsplit(sum(b.rank for b in parts), total)
    if op == "tensor":
        a, b = (_realize(x, ctx) for x in e.args)
        if isinstance(a, _Split) and isinstance(b, _Split):
            return _Split(tuple(x + y for x, y in zip(r, s)) for r in a.roots for s in b.roots)
        if isinstance(b, _Split):
            a, b = b, a
        if isinstance(b, _Split) or not isinstance(a, _Split):
            raise UnsupportedBundle(f"cannot split {e}: tensor of two unsplit bundles")
        # c(L (x) F) = sum_m c_m(F) (1 + c_1 L)^(rank F - m)
        chern_f = [_poly.homogeneous_part(b.total, m) for m in range(b.rank + 1)]
        total = _poly.const(k, 1)
        for r in a.roots:
            one_plus = _poly.add(_poly.const(k, 1), _poly.linear(r))
            factor = {}
            for m, cm in enumerate(chern_f):
                if cm:
                    factor = _poly.add(factor, _poly.mul(cm, _poly.power(one_plus, b.rank - m, k, top), top))
            total = _poly.mul(total, factor, top)
        return _Unsplit(a.rank * b.rank, total)
    if op in ("sym", "wedge"):
        b = _realize(e.args[0], ctx)
        if not isinstance(b, _Split):
            raise UnsupportedBundle(f"{op} power of {e.args[0]} needs Chern roots")
        pick = combinations_with_replacement if op == "sym" else combinations
        return _Split(tuple(sum(cs) for cs in zip(*sel)) if sel else (0,) * k
                      for sel in pick(b.roots, e.degree))
    raise UnsupportedBundle(f"unknown operation {op!r}")


def _symmetric_to_chow(p, ctx: GrassmannianContext) -> ChowClass:
    terms = {}
    for lam, c in _poly.schur_expand(p, ctx.k).items():
        lam = Partition(lam)
        if lam.fits(ctx.k, ctx.width):
            terms[lam] = c
    return ChowClass(ctx, terms)


@lru_cache(maxsize=None)
def total_chern(e: Bundle, ctx: GrassmannianContext) -> GradedClass:
    """Total Chern class of a bundle expression, up to the dimension of Gr."""
    b = _realize(e, ctx)
    total = _as_total(b, ctx.k, ctx.dim)
    return GradedClass.from_class(_symmetric_to_chow(total, ctx), ctx.dim)


def top_chern(e: Bundle, ctx: GrassmannianContext) -> ChowClass:
    """c_rank(e); for split bundles this is just the product of the roots."""
    rank = e.rank(ctx)
    if rank > ctx.dim:
        return ChowClass.zero(ctx)
    b = _realize(e, ctx)
    if isinstance(b, _Split):
        p = _poly.const(ctx.k, 1)
        for r in b.roots:
            p = _poly.mul(p, _poly.linear(r), ctx.dim)
        return _symmetric_to_chow(p, ctx)
    return total_chern(e, ctx)[rank]


def tangent_chern(ctx: GrassmannianContext) -> GradedClass:
    return total_chern(tangent_bundle(), ctx)


def chern_character(e: Bundle, ctx: GrassmannianContext, max_degree: int = 3) -> GradedClass:
    c = total_chern(e, ctx).truncate(max_degree)
    return chern_character_from_total(c, e.rank(ctx))


@lru_cache(maxsize=None)
def _todd_log_coefficients(n: int) -> tuple[Fraction, ...]:
    # coefficients a_m with log(x / (1 - e^-x)) = sum_m a_m x^m
    f = [Fraction((-1) ** j, factorial(j + 1)) for j in range(n + 1)]  # (1 - e^-x)/x
    # log f = integral of f'/f; f(0) = 1
    inv = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        inv[m] = -sum(f[i] * inv[m - i] for i in range(1, m + 1))
    deriv = [(j + 1) * f[j + 1] for j in range(n)]
    quot = [sum(deriv[i] * inv[m - i] for i in range(m + 1)) for m in range(n)]
    log_f = [Fraction(0)] + [quot[m - 1] / m for m in range(1, n + 1)]
    return tuple(-a for a in log_f)


def todd(c: GradedClass, max_degree: int = 3) -> GradedClass:
    """Todd class from a total Chern class.

    Up to degree 3: 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24. Higher degrees come from
    td = exp(sum_m a_m p_m) with p_m the power sums of the roots.
    """
    c = c.truncate(max_degree)
    if c[0] != 1:
        raise ValueError("todd expects a total Chern class")
    a = _todd_log_coefficients(c.max_degree)
    p = power_sums(c, 0)
    log_td = GradedClass(c.context, tuple(p[m] * a[m] for m in range(c.max_degree + 1)))
    return graded_exp(log_td)


def fano_class(ctx: GrassmannianContext, degrees: Sequence[int]) -> ChowClass:
    """Class of the zero locus of a general section of sum_i Sym^{d_i}(S*)."""
    e = fano_bundle(degrees)
    if e.rank(ctx) > ctx.dim:
        raise ValueError(f"rank {e.rank(ctx)} exceeds dim Gr = {ctx.dim}")
    return top_chern(e, ctx)


def fano_dimension(ctx: GrassmannianContext, degrees: Sequence[int]) -> int:
    return ctx.dim - fano_bundle(degrees).rank(ctx)


def fano_tangent_chern(ctx: GrassmannianContext, degrees: Sequence[int],
                       max_degree: Optional[int] = None) -> GradedClass:
    """c(T_F) = c(T_Gr) / c(E), with classes understood as restricted to F."""
    fdim = fano_dimension(ctx, degrees)
    if fdim < 0:
        raise ValueError(f"rank of the bundle exceeds dim Gr = {ctx.dim}")
    if max_degree is None:
        max_degree = min(max(3, fdim), ctx.dim)
    c_gr = tangent_chern(ctx).truncate(max_degree)
    c_e = total_chern(fano_bundle(degrees), ctx).truncate(max_degree)
    return c_gr * c_e.inverse()


def degree(ctx: GrassmannianContext, degrees: Sequence[int]) -> Coeff:
    """Degree of F in the Pluecker embedding: int sigma_1^dim * [F]."""
    fdim = fano_dimension(ctx, degrees)
    h = ChowClass.schubert(ctx, (1,))
    return ((h ** fdim) * fano_class(ctx, degrees)).integrate()


def canonical_and_expected_dim(n: int) -> tuple[int, int]:
    """(coefficient of sigma_1 in K_F, expected dimension) for planes on X in P^n."""
    if n < 7:
        raise ValueError("need n >= 7")
    ctx = GrassmannianContext(3, n + 1)
    c1_e = total_chern(fano_bundle((2, 2, 2)), ctx)[1].coefficient((1,))
    c1_t = tangent_chern(ctx)[1].coefficient((1,))
    k_coeff = c1_e - c1_t
    if k_coeff != 12 - (n + 1):
        raise ArithmeticError(f"adjunction mismatch: {k_coeff} != {12 - (n + 1)}")
    expdim = 3 * (n - 2) - 3 * 6
    if expdim != fano_dimension(ctx, (2, 2, 2)):
        raise ArithmeticError("expected dimension mismatch")
    return k_coeff, expdim
