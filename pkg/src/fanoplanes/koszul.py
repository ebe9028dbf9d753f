"""Koszul resolution of O_F on Gr(3, 10) and its hypercohomology spectral sequence.

E_1^{p,q} = H^q(wedge^{-p} E*) => H^{p+q}(O_F), for -18 <= p <= 0, with every
E_1 term computed by Bott's theorem from the plethysm of wedge^{-p} E*.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .bott import BottResult, bott_cohomology
from .chow import GrassmannianContext
from .invariants import InconsistencyError, hrr_chi, threefold_invariants
from .partitions import Partition
from .schur_decomp import SchurDecomposition, wedge_E, _top

KOSZUL_CONTEXT = GrassmannianContext(3, 10)
DEGENERATION = "degeneration_at_E2"


@dataclass(frozen=True)
class KoszulTerm:
    weight: Partition
    mult: int
    cohomology: BottResult

    @property
    def active(self) -> bool:
        return not self.cohomology.is_zero

    def to_json(self) -> dict:
        return {"partition": list(self.weight), "mult": self.mult, "active": self.active,
                "cohomology": self.cohomology.to_json()}


@dataclass(frozen=True)
class KoszulRow:
    r: int
    terms: tuple[KoszulTerm, ...]

    @property
    def decomposition(self) -> SchurDecomposition:
        return SchurDecomposition(KOSZUL_CONTEXT.k, {t.weight: t.mult for t in self.terms})

    def active_terms(self) -> list[KoszulTerm]:
        return [t for t in self.terms if t.active]

    def to_json(self) -> dict:
        return {"r": self.r, "terms": [t.to_json() for t in self.terms]}


def koszul_term_table(r: int) -> KoszulRow:
    """wedge^r E* with each summand marked by whether it has cohomology."""
    decomposition = wedge_E(r)
    return KoszulRow(r, tuple(
        KoszulTerm(lam, m, bott_cohomology(lam, KOSZUL_CONTEXT))
        for lam, m in decomposition.sorted_terms()
    ))


@dataclass(frozen=True)
class SpectralTable:
    """Nonzero E_1 terms, keyed by (p, q)."""

    entries: dict = field(default_factory=dict)

    def dims(self) -> dict[tuple[int, int], int]:
        return {pq: sum(t.mult * t.cohomology.dimension for t in terms)
                for pq, terms in sorted(self.entries.items())}

    def support(self) -> list[tuple[int, int]]:
        return sorted(self.entries)

    def total_degree(self, t: int) -> list[tuple[int, int]]:
        return [pq for pq in self.support() if sum(pq) == t]

    def isolated(self, p: int, q: int) -> bool:
        """No differential d_r (r >= 1) into or out of (p, q) can be nonzero."""
        span = _top() + 1
        for r in range(1, span + 1):
            if (p + r, q - r + 1) in self.entries or (p - r, q + r - 1) in self.entries:
                return False
        return True

    def to_json(self) -> dict:
        dims = self.dims()
        return {"entries": [
            {"p": p, "q": q, "dim": dims[(p, q)], "terms": [t.to_json() for t in self.entries[(p, q)]]}
            for p, q in self.support()
        ]}


def cohomology_contributions() -> SpectralTable:
    entries: dict[tuple[int, int], list[KoszulTerm]] = {}
    for r in range(_top() + 1):
        for term in koszul_term_table(r).active_terms():
            entries.setdefault((-r, term.cohomology.degree), []).append(term)
    return SpectralTable({pq: tuple(ts) for pq, ts in entries.items()})


def euler_check(table: Optional[SpectralTable] = None) -> int:
    """Alternating sum of E_1; must agree with chi(O_F) from Riemann-Roch."""
    table = table or cohomology_contributions()
    chi = sum((-1) ** (p + q) * d for (p, q), d in table.dims().items())
    expected = hrr_chi(threefold_invariants(KOSZUL_CONTEXT, (2, 2, 2)), 0)
    if chi != expected:
        raise InconsistencyError(f"Koszul Euler characteristic {chi} != HRR value {expected}")
    return chi


def block_sum(table: SpectralTable, q: int) -> int:
    """Signed contribution (-1)^(p+q) dim E_1^{p,q} of one row of the E_1 page."""
    return sum((-1) ** (p + qq) * d for (p, qq), d in table.dims().items() if qq == q)


@dataclass(frozen=True)
class CohomologyEstimate:
    h: tuple[int, ...]
    derived_from: dict
    conjectural: dict = field(default_factory=dict)
    assumptions: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "h": list(self.h),
            "derivation": {f"h{t}": how for t, how in self.derived_from.items()},
            "E2": [{"p": p, "q": q, "dim": d, "conjectural": True}
                   for (p, q), d in sorted(self.conjectural.items())],
            "assumptions": list(self.assumptions),
        }


def sheaf_cohomology_estimate(assume_degeneration: bool = False,
                              table: Optional[SpectralTable] = None) -> CohomologyEstimate:
    """h^i(O_F) for i = 0..3.

    h^0, h^1, h^2 are read off total degrees whose E_1 terms admit no
    differentials at all; h^3 then follows from chi(O_F). With
    ``assume_degeneration`` the E_2 page is also reported under the unproven
    hypothesis that each row of E_1 is exact except at its leftmost term.
    """
    table = table or cohomology_contributions()
    dims = table.dims()
    fdim = threefold_invariants(KOSZUL_CONTEXT, (2, 2, 2)).dim
    h: list[int] = []
    how: dict[int, str] = {}
    for t in range(fdim):
        spots = table.total_degree(t)
        if not all(table.isolated(p, q) for p, q in spots):
            raise InconsistencyError(f"total degree {t} is not determined by E_1 positions")
        h.append(sum(dims[pq] for pq in spots))
        how[t] = "E1 positions: " + (", ".join(f"({p},{q})" for p, q in spots) or "no terms")
    chi = euler_check(table)
    partial = sum((-1) ** t * v for t, v in enumerate(h))
    h.append((-1) ** fdim * (chi - partial))
    how[fdim] = "Euler characteristic"
    conjectural = {}
    assumptions: tuple[str, ...] = ()
    if assume_degeneration:
        assumptions = (DEGENERATION,)
        rows: dict[int, list[int]] = {}
        for p, q in table.support():
            rows.setdefault(q, []).append(p)
        for q, ps in rows.items():
            if len(ps) > 1:
                left = min(ps)
                conjectural[(left, q)] = sum((-1) ** (p - left) * dims[(p, q)] for p in ps)
    return CohomologyEstimate(tuple(h), how, conjectural, assumptions)
