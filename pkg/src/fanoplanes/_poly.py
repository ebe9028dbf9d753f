"""Sparse polynomials in k variables with degree truncation.

A polynomial is a dict mapping exponent tuples to exact rational coefficients.
Used for splitting-principle computations in the formal Chern roots of S*.
"""
from __future__ import annotations

from itertools import combinations

Poly = dict


def const(k: int, c) -> Poly:
    return {(0,) * k: c} if c else {}


def linear(coeffs) -> Poly:
    k = len(coeffs)
    out = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * k
            e[i] = 1
            out[tuple(e)] = c
    return out


def add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def scale(p: Poly, c) -> Poly:
    return {e: v * c for e, v in p.items()} if c else {}


def mul(p: Poly, q: Poly, max_degree: int) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        d1 = sum(e1)
        for e2, c2 in q.items():
            if d1 + sum(e2) > max_degree:
                continue
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def power(p: Poly, n: int, k: int, max_degree: int) -> Poly:
    out = const(k, 1)
    for _ in range(n):
        out = mul(out, p, max_degree)
    return out


def homogeneous_part(p: Poly, d: int) -> Poly:
    return {e: c for e, c in p.items() if sum(e) == d}


def sign_by_degree(p: Poly) -> Poly:
    """Substitute x -> -x."""
    return {e: (-c if sum(e) % 2 else c) for e, c in p.items()}


def complete_homogeneous(k: int, m: int) -> Poly:
    """h_m(x_1, ..., x_k): sum of all monomials of degree m."""
    out = {}

    def rec(i, rest, acc):
        if i == k - 1:
            out[tuple(acc + [rest])] = 1
            return
        for a in range(rest, -1, -1):
            rec(i + 1, rest - a, acc + [a])

    if k == 0:
        return const(0, 1) if m == 0 else {}
    rec(0, m, [])
    return out


def vandermonde(k: int) -> Poly:
    out = const(k, 1)
    for i, j in combinations(range(k), 2):
        coeffs = [0] * k
        coeffs[i], coeffs[j] = 1, -1
        out = mul(out, linear(coeffs), k * k)
    return out


def schur_expand(p: Poly, k: int) -> dict[tuple[int, ...], object]:
    """Expansion of a symmetric polynomial in Schur polynomials s_lam(x_1..x_k).

    Uses the bialternant: p * Vandermonde = sum_lam c_lam a_{lam+delta}, and the
    coefficient of x^(lam+delta) for strictly decreasing exponents is c_lam.
    """
    alt = mul(p, vandermonde(k), 10 ** 9)
    out = {}
    for e, c in alt.items():
        if all(e[i] > e[i + 1] for i in range(k - 1)):
            lam = tuple(e[i] - (k - 1 - i) for i in range(k))
            out[lam] = c
    return out
