"""Chow ring of the Grassmannian Gr(k, n) in the Schubert basis."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Union

from .partitions import Partition, lr_coefficients, partitions_of

Coeff = Union[int, Fraction]


def _norm(c) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficient must be an exact rational, got {c!r}")
    return c


@dataclass(frozen=True)
class GrassmannianContext:
    """Gr(k, n): k-planes in an n-dimensional space, box of k rows by n-k columns."""

    k: int
    n: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def width(self) -> int:
        return self.n - self.k

    @property
    def dim(self) -> int:
        return self.k * self.width

    def fits(self, lam: Iterable[int]) -> bool:
        return Partition(lam).fits(self.k, self.width)

    def check(self, lam: Iterable[int]) -> Partition:
        lam = Partition(lam)
        if not lam.fits(self.k, self.width):
            raise ValueError(f"{list(lam)} does not fit the {self.k}x{self.width} box")
        return lam

    def point(self) -> Partition:
        return Partition([self.width] * self.k)

    def basis(self, degree: int | None = None) -> list[Partition]:
        """Schubert basis, optionally of one degree, in descending lex order."""
        degrees = range(self.dim + 1) if degree is None else [degree]
        out = []
        for d in degrees:
            out.extend(partitions_of(d, max_rows=self.k, max_part=self.width))
        return sorted(out, reverse=True)

    def to_json(self) -> list[int]:
        return [self.k, self.n]


@lru_cache(maxsize=None)
def _structure(ctx: GrassmannianContext, lam: Partition, mu: Partition):
    return tuple(lr_coefficients(lam, mu, max_rows=ctx.k, max_cols=ctx.width).items())


@dataclass(frozen=True, eq=False)
class ChowClass:
    """Finite combination of Schubert classes; ``terms`` must not be mutated."""

    context: GrassmannianContext
    terms: Mapping[Partition, Coeff] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.terms.items():
            lam = self.context.check(lam)
            c = _norm(c)
            if c:
                clean[lam] = _norm(clean.get(lam, 0) + c)
                if not clean[lam]:
                    del clean[lam]
        object.__setattr__(self, "terms", clean)

    @classmethod
    def schubert(cls, ctx: GrassmannianContext, lam: Iterable[int], coeff: Coeff = 1) -> "ChowClass":
        return cls(ctx, {Partition(lam): coeff})

    @classmethod
    def one(cls, ctx: GrassmannianContext) -> "ChowClass":
        return cls(ctx, {Partition(): 1})

    @classmethod
    def zero(cls, ctx: GrassmannianContext) -> "ChowClass":
        return cls(ctx, {})

    def _same(self, other: "ChowClass"):
        if self.context != other.context:
            raise ValueError(f"context mismatch: {self.context} vs {other.context}")

    def __eq__(self, other):
        if isinstance(other, ChowClass):
            return self.context == other.context and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.terms == ({Partition(): other} if other else {})
        return NotImplemented

    def __add__(self, other: "ChowClass") -> "ChowClass":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = ChowClass(self.context, {Partition(): other})
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return ChowClass(self.context, out)

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.context, {lam: -c for lam, c in self.terms.items()})

    __radd__ = __add__

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __rsub__(self, other) -> "ChowClass":
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ChowClass):
            return chow_multiply(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ChowClass(self.context, {lam: c * other for lam, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        return self * (1 / Fraction(other))

    def __pow__(self, e: int) -> "ChowClass":
        out = ChowClass.one(self.context)
        for _ in range(e):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {lam.weight() for lam in self.terms}

    def degree_part(self, d: int) -> "ChowClass":
        return ChowClass(self.context, {lam: c for lam, c in self.terms.items() if lam.weight() == d})

    def coefficient(self, lam: Iterable[int]) -> Coeff:
        return self.terms.get(Partition(lam), 0)

    def integrate(self) -> Coeff:
        return integrate(self)

    def sorted_terms(self) -> list[tuple[Partition, Coeff]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __repr__(self) -> str:
        return f"ChowClass(Gr({self.context.k},{self.context.n}), {format_class(self)})"

    def to_json(self) -> dict:
        return {
            "grassmannian": self.context.to_json(),
            "terms": [{"partition": list(lam), "coeff": coeff_to_json(c)}
                      for lam, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ChowClass":
        k, n = data["grassmannian"]
        ctx = GrassmannianContext(int(k), int(n))
        return cls.from_terms_json(ctx, data["terms"])

    @classmethod
    def from_terms_json(cls, ctx: GrassmannianContext, terms: list) -> "ChowClass":
        out: dict[Partition, Coeff] = {}
        for t in terms:
            lam = Partition(t["partition"])
            out[lam] = out.get(lam, 0) + coeff_from_json(t.get("coeff", 1))
        return cls(ctx, out)


def coeff_to_json(c: Coeff):
    c = _norm(c)
    return c if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def coeff_from_json(c) -> Coeff:
    if isinstance(c, bool):
        raise TypeError("boolean is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"bad coefficient {c!r}")


def chow_multiply(a: ChowClass, b: ChowClass) -> ChowClass:
    """Product in the Chow ring: LR expansion with terms outside the box dropped."""
    a._same(b)
    ctx = a.context
    out: dict[Partition, Coeff] = {}
    for lam, c in a.terms.items():
        for mu, d in b.terms.items():
            for nu, m in _structure(ctx, lam, mu):
                out[nu] = out.get(nu, 0) + c * d * m
    return ChowClass(ctx, out)


def integrate(a: ChowClass) -> Coeff:
    """Coefficient of the point class."""
    return a.terms.get(a.context.point(), 0)


def complement(lam: Iterable[int], ctx: GrassmannianContext) -> Partition:
    """Poincare-dual partition (w - lam_k, ..., w - lam_1)."""
    lam = ctx.check(lam)
    padded = lam.padded(ctx.k)
    return Partition(ctx.width - p for p in reversed(padded))


def sigma(ctx: GrassmannianContext, *parts: int) -> ChowClass:
    return ChowClass.schubert(ctx, parts)


def format_class(a: ChowClass) -> str:
    if not a.terms:
        return "0"
    out = ""
    for lam, c in a.sorted_terms():
        sign, c = ("-" if c < 0 else "+"), abs(c)
        name = "s(" + ",".join(map(str, lam)) + ")" if lam else ""
        if not name:
            body = str(c)
        elif c == 1:
            body = name
        else:
            body = (f"{c}" if isinstance(c, int) else f"({c})") + "*" + name
        out += (f" {sign} " if out else ("-" if sign == "-" else "")) + body
    return out
