"""Partitions, Littlewood-Richardson coefficients and Weyl dimensions.

Partitions are immutable tuples of weakly decreasing nonnegative integers with
trailing zeros stripped, so ``Partition([2, 1, 0]) == Partition([2, 1])``.
They index both Schur functors and Schubert classes elsewhere in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def length(self) -> int:
        return len(self)

    def weight(self) -> int:
        return sum(self)

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts padded with zeros to length ``n``."""
        if len(self) > n:
            raise ValueError(f"{list(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def fits(self, rows: Optional[int], cols: Optional[int]) -> bool:
        if rows is not None and len(self) > rows:
            return False
        if cols is not None and self and self[0] > cols:
            return False
        return True

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def to_json(self) -> list[int]:
        return list(self)


def conjugate(lam: Iterable[int]) -> Partition:
    """Transpose of the Young diagram."""
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partitions_of(n: int, max_rows: Optional[int] = None,
                  max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``n``, in lexicographically decreasing order."""
    max_part = n if max_part is None else min(max_part, n)
    max_rows = n if max_rows is None else max_rows

    def rec(rest, bound, rows):
        if rest == 0:
            yield ()
            return
        if rows == 0:
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in rec(rest - first, first, rows - 1):
                yield (first,) + tail

    for p in rec(n, max_part, max_rows):
        yield Partition(p)


# Frobenius coordinates, Macdonald convention: for the diagonal box in row i
# (1-indexed) the arm is lam_i - i and the leg is lam'_i - i.

@dataclass(frozen=True)
class FrobeniusCoords:
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        if len(self.arms) != len(self.legs):
            raise ValueError("arms and legs must have the same length")
        for seq in (self.arms, self.legs):
            if any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{seq} is not strictly decreasing")
            if seq and seq[-1] < 0:
                raise ValueError(f"{seq} has negative entries")

    @property
    def rank(self) -> int:
        return len(self.arms)


def frobenius(lam: Iterable[int]) -> FrobeniusCoords:
    lam = Partition(lam)
    lamc = conjugate(lam)
    r = sum(1 for i, p in enumerate(lam, start=1) if p >= i)
    return FrobeniusCoords(
        arms=tuple(lam[i - 1] - i for i in range(1, r + 1)),
        legs=tuple(lamc[i - 1] - i for i in range(1, r + 1)),
    )


def from_frobenius(f: FrobeniusCoords) -> Partition:
    if not isinstance(f, FrobeniusCoords):
        f = FrobeniusCoords(tuple(f[0]), tuple(f[1]))
    r = f.rank
    if r == 0:
        return Partition()
    rows = [f.arms[i] + i + 1 for i in range(r)]
    # below the Durfee square, row j has as many boxes as there are legs reaching it
    height = f.legs[0] + 1
    for j in range(r + 1, height + 1):
        rows.append(sum(1 for i in range(1, r + 1) if f.legs[i - 1] + i >= j))
    return Partition(rows)


@lru_cache(maxsize=None)
def _lr_cached(lam: Partition, mu: Partition, max_rows, max_cols):
    # Fill the skew shape nu/lam with mu_1 ones, then mu_2 twos, ...; each label
    # forms a horizontal strip. The reverse reading word is a lattice word iff,
    # for every row r, the number of (i+1)'s in rows <= r is at most the number
    # of i's in rows < r.
    result: dict[Partition, int] = {}
    m = len(mu)
    if m == 0:
        if lam.fits(max_rows, max_cols):
            result[lam] = 1
        return tuple(result.items())
    nrows = len(lam) + m
    if max_rows is not None:
        nrows = min(nrows, max_rows)
    if len(lam) > nrows:
        return ()
    start = list(lam.padded(nrows))

    def add_strip(shape, label_idx, prev_counts, acc):
        size = mu[label_idx]
        counts = [0] * nrows

        def place(row, remaining, cum):
            if row == nrows:
                if remaining == 0:
                    new_shape = [shape[r] + counts[r] for r in range(nrows)]
                    if label_idx + 1 == m:
                        key = Partition(new_shape)
                        acc[key] = acc.get(key, 0) + 1
                    else:
                        add_strip(new_shape, label_idx + 1, list(counts), acc)
                return
            if row == 0:
                cap = remaining if max_cols is None else min(remaining, max_cols - shape[0])
            else:
                cap = min(remaining, shape[row - 1] - shape[row])
            if prev_counts is not None:
                allowed = sum(prev_counts[:row]) - cum
                cap = min(cap, allowed)
            for x in range(cap, -1, -1):
                counts[row] = x
                place(row + 1, remaining - x, cum + x)
            counts[row] = 0

        place(0, size, 0)

    add_strip(start, 0, None, result)
    return tuple(result.items())


def lr_coefficients(lam: Iterable[int], mu: Iterable[int], *,
                    max_rows: Optional[int] = None,
                    max_cols: Optional[int] = None) -> dict[Partition, int]:
    """Littlewood-Richardson expansion of s_lam * s_mu.

    Without bounds this is the full expansion. ``max_rows``/``max_cols`` prune
    terms that do not fit; this is exact truncation since shapes only grow.
    """
    lam, mu = Partition(lam), Partition(mu)
    # fewer labels means a shallower search
    if len(mu) > len(lam) or (len(mu) == len(lam) and sum(mu) > sum(lam)):
        lam, mu = mu, lam
    return dict(_lr_cached(lam, mu, max_rows, max_cols))


def weyl_dim(lam: Iterable[int], r: int) -> int:
    """Dimension of the Schur functor of ``lam`` applied to an r-dimensional space."""
    parts = list(lam)
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts.pop()
    if len(parts) > r:
        return 0
    parts += [0] * (r - len(parts))
    num = den = 1
    for i in range(r):
        for j in range(i + 1, r):
            num *= parts[i] - parts[j] + j - i
            den *= j - i
    return num // den
