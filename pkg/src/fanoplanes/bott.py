"""Borel-Weil-Bott for Schur functors of the tautological subbundle S on Gr(k, n).

For a = (a_1, ..., a_k) form the rho-shifted sequence

    s = (-1, -2, ..., -(n-k), a_1 - (n-k) - 1, ..., a_k - (n-k) - k).

A repeated entry means every cohomology group vanishes. Otherwise the only
nonzero group sits in degree j = #{i < l : s_i < s_l}, and it is the GL(n)
representation with highest weight mu_i = t_i + i, t the decreasing sort of s.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .chow import GrassmannianContext
from .partitions import Partition, weyl_dim


@dataclass(frozen=True)
class BottResult:
    """Either zero (singular weight) or H^degree = Schur functor of ``weight``.

    ``weight`` is normalized so its last entry is 0; ``twist`` is the power of
    det V that was removed. Dimensions do not depend on the twist.
    """

    degree: Optional[int] = None
    weight: Optional[Partition] = None
    twist: int = 0
    dimension: int = 0

    @property
    def is_zero(self) -> bool:
        return self.degree is None

    def full_weight(self, n: int) -> tuple[int, ...]:
        return tuple(x + self.twist for x in self.weight.padded(n))

    def to_json(self) -> dict:
        if self.is_zero:
            return {"zero": True}
        return {"zero": False, "degree": self.degree, "weight": list(self.weight),
                "twist": self.twist, "dimension": self.dimension}

    @classmethod
    def from_json(cls, data: dict) -> "BottResult":
        if data["zero"]:
            return cls()
        return cls(data["degree"], Partition(data["weight"]), data["twist"], data["dimension"])


ZERO = BottResult()


def shifted_sequence(a: Iterable[int], ctx: GrassmannianContext) -> list[int]:
    a = list(a)
    if any(x < y for x, y in zip(a, a[1:])):
        raise ValueError(f"{a} is not weakly decreasing")
    while len(a) > ctx.k and a[-1] == 0:
        a.pop()
    if len(a) > ctx.k:
        raise ValueError(f"{a} has more than {ctx.k} parts")
    a = a + [0] * (ctx.k - len(a))
    w = ctx.width
    return [-(i + 1) for i in range(w)] + [a[i] - w - (i + 1) for i in range(ctx.k)]


def bott_cohomology(a: Iterable[int], ctx: GrassmannianContext) -> BottResult:
    s = shifted_sequence(a, ctx)
    if len(set(s)) < len(s):
        return ZERO
    j = sum(1 for i in range(len(s)) for l in range(i + 1, len(s)) if s[i] < s[l])
    t = sorted(s, reverse=True)
    mu = [t[i] + i + 1 for i in range(len(t))]
    twist = mu[-1]
    weight = Partition(x - twist for x in mu)
    return BottResult(j, weight, twist, weyl_dim(weight, ctx.n))
