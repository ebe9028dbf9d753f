"""Plethysm for the Koszul complex of E* = Sym^2(S)^{+3} on Gr(3, n).

The exterior powers of Sym^2 are multiplicity free:

    wedge^k Sym^2 V = sum of Schur functors of lam, |lam| = 2k,

over the partitions whose Frobenius coordinates satisfy arms = legs + 1. Such
lam correspond to strict partitions of k (the parts being legs + 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Iterator, Mapping

from .partitions import FrobeniusCoords, Partition, from_frobenius, lr_coefficients, weyl_dim

COPIES = 3
BASE_RANK = 3


@dataclass(frozen=True, eq=False)
class SchurDecomposition:
    """Direct sum of Schur functors of a rank-``rank`` space, with multiplicities."""

    rank: int
    terms: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Partition, int] = {}
        for lam, m in self.terms.items():
            lam = Partition(lam)
            if len(lam) > self.rank:
                raise ValueError(f"{list(lam)} has more than {self.rank} rows")
            if m < 0:
                raise ValueError("multiplicities are nonnegative")
            if m:
                clean[lam] = clean.get(lam, 0) + int(m)
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other):
        if not isinstance(other, SchurDecomposition):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __add__(self, other: "SchurDecomposition") -> "SchurDecomposition":
        _same_rank(self, other)
        out = dict(self.terms)
        for lam, m in other.terms.items():
            out[lam] = out.get(lam, 0) + m
        return SchurDecomposition(self.rank, out)

    def __mul__(self, other: "SchurDecomposition") -> "SchurDecomposition":
        return tensor_schur(self, other)

    def dimension(self) -> int:
        return sum(m * weyl_dim(lam, self.rank) for lam, m in self.terms.items())

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), reverse=True)

    def padded_terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for lam, m in self.sorted_terms():
            yield lam.padded(self.rank), m

    def __repr__(self) -> str:
        return f"SchurDecomposition(rank={self.rank}, {format_decomposition(self)})"

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "terms": [{"partition": list(lam), "mult": m} for lam, m in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: dict) -> "SchurDecomposition":
        return cls(int(data["rank"]), {Partition(t["partition"]): int(t["mult"]) for t in data["terms"]})


def _same_rank(a: SchurDecomposition, b: SchurDecomposition):
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")


def format_decomposition(d: SchurDecomposition) -> str:
    if not d.terms:
        return "0"
    pieces = []
    for lam, m in d.sorted_terms():
        name = "G(" + ",".join(map(str, lam)) + ")"
        pieces.append(name if m == 1 else f"{m}{name}")
    return " + ".join(pieces)


def _strict_partitions(k: int, bound: int | None = None) -> Iterator[tuple[int, ...]]:
    bound = k if bound is None else bound
    if k == 0:
        yield ()
        return
    for first in range(min(k, bound), 0, -1):
        for rest in _strict_partitions(k - first, first - 1):
            yield (first,) + rest


def wedge_sym2(k: int, rank: int = BASE_RANK) -> SchurDecomposition:
    """wedge^k Sym^2 of a rank-``rank`` space."""
    top = comb(rank + 1, 2)
    if not 0 <= k <= top:
        raise ValueError(f"k must lie in [0, {top}]")
    terms = {}
    for strict in _strict_partitions(k):
        legs = tuple(p - 1 for p in strict)
        lam = from_frobenius(FrobeniusCoords(tuple(b + 1 for b in legs), legs))
        if len(lam) <= rank:
            terms[lam] = 1
    return SchurDecomposition(rank, terms)


def tensor_schur(a: SchurDecomposition, b: SchurDecomposition) -> SchurDecomposition:
    _same_rank(a, b)
    out: dict[Partition, int] = {}
    for lam, m in a.terms.items():
        for mu, n in b.terms.items():
            for nu, c in lr_coefficients(lam, mu, max_rows=a.rank).items():
                out[nu] = out.get(nu, 0) + m * n * c
    return SchurDecomposition(a.rank, out)


def compositions(r: int, parts: int = COPIES, bound: int = comb(BASE_RANK + 1, 2)) -> list[tuple[int, ...]]:
    """Compositions of r into ``parts`` entries in [0, bound], lexicographic order."""
    return [e for e in product(range(bound + 1), repeat=parts) if sum(e) == r]


def _top() -> int:
    return COPIES * comb(BASE_RANK + 1, 2)


def _det_weight() -> int:
    # det Sym^2 V = (det V)^(rank + 1)
    return COPIES * (BASE_RANK + 1)


@lru_cache(maxsize=None)
def wedge_E_direct(r: int) -> SchurDecomposition:
    """wedge^r E* as a sum over (e1, e2, e3) of tensor products of wedge^{e_i} Sym^2."""
    if not 0 <= r <= _top():
        raise ValueError(f"r must lie in [0, {_top()}]")
    out = SchurDecomposition(BASE_RANK, {})
    for comp in compositions(r):
        term = SchurDecomposition(BASE_RANK, {Partition(): 1})
        for e in comp:
            term = tensor_schur(term, wedge_sym2(e, BASE_RANK))
        out = out + term
    return out


def dual_wedge(d: SchurDecomposition, r: int) -> SchurDecomposition:
    """wedge^r E* = det(E*) (x) wedge^{18-r} E, from d = wedge^{18-r} E*."""
    top, w = _top(), _det_weight()
    if not 0 <= r <= top:
        raise ValueError(f"r must lie in [0, {top}]")
    out = {}
    for lam, m in d.terms.items():
        if lam.weight() != 2 * (top - r):
            raise ValueError(f"{list(lam)} does not belong to wedge^{top - r}")
        a = lam.padded(d.rank)
        if a[0] > w:
            raise ValueError(f"{list(lam)} has a part exceeding {w}")
        out[Partition(w - x for x in reversed(a))] = m
    return SchurDecomposition(d.rank, out)


@lru_cache(maxsize=None)
def wedge_E(r: int) -> SchurDecomposition:
    """wedge^r E*; for r past the middle, obtained by determinant duality."""
    top = _top()
    if not 0 <= r <= top:
        raise ValueError(f"r must lie in [0, {top}]")
    if 2 * r <= top:
        return wedge_E_direct(r)
    return dual_wedge(wedge_E(top - r), r)
