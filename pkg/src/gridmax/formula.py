"""Exact values of E_d(n), the maximum edge count of an n-point grid set.

``max_edges`` evaluates the closed form ``d*n - discrepancy(pcr)``;
``f_recursive`` reaches the same number by recursing on the leading pseudo
cube, and exists so the two can be checked against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from gridmax.errors import DomainError
from gridmax.pcr import Pcr, cubic_value, iroot, leading_pair, pcr_decompose

__all__ = [
    "EdgeMaxResult",
    "discrepancy",
    "max_edges",
    "f_pseudo_cube",
    "f_recursive",
    "asymptotic_bound",
    "harary_harborth",
    "binary_ones_formula",
    "projection_lower_bound",
]


@dataclass(frozen=True, slots=True)
class EdgeMaxResult:
    n: int
    d: int
    edges: int
    discrepancy: int
    pcr: Pcr


def _term_deficit(m: int, l: int, i: int) -> int:
    # l*[m,l-1]^(i-1) + (i-l)*[m,l]^(i-1); the first summand vanishes at l = 0
    if l:
        low = (m + 1) ** (l - 1) * m ** (i - l)
        return l * low + (i - l) * low * (m + 1) // m
    return i * m ** (i - 1)


def discrepancy(p: Pcr) -> int:
    """The deficit ``d*n - E_d(n)`` read off the representation."""
    return sum(_term_deficit(t.m, t.l, t.dim) for t in p.terms)


def max_edges(n: int, d: int) -> EdgeMaxResult:
    """Maximum number of edges induced by ``n`` points of the d-dimensional grid."""
    p = pcr_decompose(n, d)
    delta = discrepancy(p)
    return EdgeMaxResult(n, d, d * n - delta, delta, p)


def f_pseudo_cube(m: int, l: int, d: int) -> int:
    """Edge count of the box ``[m+1]^l x [m]^(d-l)``."""
    if d < 1 or m < 1 or not 0 <= l <= d - 1:
        raise DomainError(f"need m >= 1, d >= 1, 0 <= l <= d-1; got {m}, {l}, {d}")
    return d * cubic_value(m, l, d) - _term_deficit(m, l, d)


def f_recursive(n: int, d: int) -> int:
    """E_d(n) by recursion on the leading pseudo cube.

    ``F_d(n) = F_d([n]-) + F_{d-1}(n - [n]-) + (n - [n]-)`` with the path
    ``n - 1`` at ``d = 1``. The memo lives only for this call.
    """
    if n < 1 or d < 1:
        raise DomainError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    memo: dict[tuple[int, int], int] = {}

    def rec(k: int, dim: int) -> int:
        if k == 0:
            return 0
        if dim == 1:
            return k - 1
        hit = memo.get((k, dim))
        if hit is not None:
            return hit
        m, l = leading_pair(k, dim)
        rest = k - cubic_value(m, l, dim)
        value = f_pseudo_cube(m, l, dim) + rec(rest, dim - 1) + rest
        memo[k, dim] = value
        return value

    return rec(n, d)


def asymptotic_bound(n: int, d: int) -> int:
    """``floor(d*n*(1 - n**(-1/d)))`` evaluated exactly.

    Equals ``d*n - ceil(d * n**((d-1)/d))`` where the ceiling is the least
    ``k`` with ``k**d >= d**d * n**(d-1)``.
    """
    if n < 1 or d < 1:
        raise DomainError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    target = d**d * n ** (d - 1)
    k = iroot(target, d)
    if k**d < target:
        k += 1
    return d * n - k


def harary_harborth(n: int) -> int:
    """``floor(2n - 2*sqrt(n))`` via ``2n - ceil(sqrt(4n))``."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    r = math.isqrt(4 * n)
    if r * r < 4 * n:
        r += 1
    return 2 * n - r


def binary_ones_formula(n: int) -> int:
    """Total number of 1-bits in the binary expansions of ``1, ..., n-1``.

    Evaluated through the discrepancy with ``d`` the bit length of ``n``,
    where each term of the representation is one set bit of ``n``.
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    d = n.bit_length()
    bits = [b for b in range(d - 1, -1, -1) if n >> b & 1]
    delta = 0
    for i, l in zip(range(d, 0, -1), bits):
        # l * 2**(l-1) is an integer for every l >= 0
        delta += (l << l) // 2 + (i - l) * (1 << l)
    return d * n - delta


def projection_lower_bound(m: int, l: int, d: int) -> int:
    """Least possible sum of the d codimension-one projection sizes of a
    ``[m,l]^d``-point set."""
    if d < 1 or m < 1 or not 0 <= l <= d - 1:
        raise DomainError(f"need m >= 1, d >= 1, 0 <= l <= d-1; got {m}, {l}, {d}")
    return _term_deficit(m, l, d)
