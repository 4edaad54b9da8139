"""Pseudo-cubic numbers and the greedy pseudo d-cubic representation.

A pseudo d-cubic is an integer of the form ``(m+1)**l * m**(d-l)`` with
``0 <= l <= d-1``; consecutive pseudo d-cubics differ by a pseudo
(d-1)-cubic, which is what makes the greedy decomposition unique.

Term notation used in reprs and docs: ``[m,l]^d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from gridmax.errors import DomainError

__all__ = [
    "PseudoCubicTerm",
    "Pcr",
    "iroot",
    "cubic_value",
    "normalize_term",
    "leading_pair",
    "pcr_decompose",
    "pcr_value",
    "pcr_compare",
    "cubic_neighbors",
]


def iroot(x: int, k: int) -> int:
    """Exact floor of the k-th root of a non-negative integer.

    Integer Newton iteration started above the root; no floating point.
    """
    if k < 1:
        raise DomainError(f"root degree must be >= 1, got {k}")
    if x < 0:
        raise DomainError(f"cannot take root of negative {x}")
    if x < 2 or k == 1:
        return x
    if k == 2:
        return math.isqrt(x)
    if k >= x.bit_length():
        return 1
    r = 1 << -(-x.bit_length() // k)
    while True:
        y = ((k - 1) * r + x // r ** (k - 1)) // k
        if y >= r:
            return r
        r = y


def cubic_value(m: int, l: int, dim: int) -> int:
    """``(m+1)**l * m**(dim-l)``; the empty product when ``dim == 0``."""
    if l < 0 or l > dim:
        raise DomainError(f"need 0 <= l <= dim, got l={l}, dim={dim}")
    if m < 1:
        raise DomainError(f"base must be positive, got m={m}")
    return (m + 1) ** l * m ** (dim - l)


class _Term(NamedTuple):
    m: int
    l: int
    dim: int


class PseudoCubicTerm(_Term):
    """One term ``[m,l]^dim``.

    ``l == dim`` is accepted (it denotes the same integer as ``[m+1,0]^dim``)
    but only normalized terms may appear inside a :class:`Pcr`.
    """

    __slots__ = ()

    def __new__(cls, m: int, l: int, dim: int) -> PseudoCubicTerm:
        if m < 1:
            raise DomainError(f"m must be >= 1, got {m}")
        if dim < 0 or not 0 <= l <= dim:
            raise DomainError(f"need 0 <= l <= dim, got l={l}, dim={dim}")
        return tuple.__new__(cls, (m, l, dim))

    @property
    def value(self) -> int:
        m, l, dim = self
        return (m + 1) ** l * m ** (dim - l)

    @property
    def normalized(self) -> bool:
        return self.l < self.dim or self.dim == 0

    def __str__(self) -> str:
        return f"[{self.m},{self.l}]^{self.dim}"


def _trusted_term(m: int, l: int, dim: int) -> PseudoCubicTerm:
    return tuple.__new__(PseudoCubicTerm, (m, l, dim))


def normalize_term(term: PseudoCubicTerm) -> PseudoCubicTerm:
    """Rewrite ``[m,dim]^dim`` as ``[m+1,0]^dim``; other terms pass through."""
    if term.dim > 0 and term.l == term.dim:
        return PseudoCubicTerm(term.m + 1, 0, term.dim)
    return term


def leading_pair(n: int, d: int) -> tuple[int, int]:
    """The ``(m, l)`` of the largest pseudo d-cubic not exceeding ``n``."""
    if n < 1 or d < 1:
        raise DomainError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    m, l, _ = _leading(n, d)
    return m, l


def _leading(n: int, d: int) -> tuple[int, int, int]:
    m = iroot(n, d)
    # linear scan over l: (m+1)**l * m**(d-l) is increasing in l
    value = m**d
    l = 0
    while l + 1 < d:
        nxt = value // m * (m + 1)
        if nxt > n:
            break
        value = nxt
        l += 1
    return m, l, value


@dataclass(frozen=True, slots=True)
class Pcr:
    """The pseudo d-cubic representation ``n = [m_d,l_d]^d + ... + [m_c,l_c]^c``.

    Only non-zero terms are stored, in order of strictly decreasing dimension.
    ``Pcr.empty(d)`` stands for ``n = 0``; :func:`pcr_decompose` never
    returns it.
    """

    terms: tuple[PseudoCubicTerm, ...]
    n: int
    d: int

    @classmethod
    def empty(cls, d: int) -> Pcr:
        return cls((), 0, d)

    @classmethod
    def from_terms(cls, terms, d: int) -> Pcr:
        """Build a representation from explicit terms, checking every invariant."""
        terms = tuple(terms)
        problem = _invariant_violation(terms, d)
        if problem:
            raise DomainError(f"not a valid {d}-PCR: {problem}")
        return cls(terms, sum(t.value for t in terms), d)

    def key(self) -> tuple[int, ...]:
        """Flattened ``(m_d, l_d, ..., m_1, l_1)`` padded with zeros."""
        flat = [0] * (2 * self.d)
        for j, t in enumerate(self.terms):
            flat[2 * j] = t.m
            flat[2 * j + 1] = t.l
        return tuple(flat)

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms) if self.terms else "0"


def _invariant_violation(terms: tuple[PseudoCubicTerm, ...], d: int) -> str | None:
    if d < 1:
        return f"dimension must be >= 1, got {d}"
    if not terms:
        return "no terms"
    for j, t in enumerate(terms):
        if t.dim != d - j:
            return f"term {j} has dimension {t.dim}, expected {d - j}"
        if not t.normalized:
            return f"term {t} is not normalized"
    for a, b in zip(terms, terms[1:]):
        if (a.m, a.l) <= (b.m, b.l):
            return f"({a.m},{a.l}) does not exceed ({b.m},{b.l})"
    tail = 0
    for t in reversed(terms):
        if tail >= cubic_value(t.m, t.l, t.dim - 1):
            return f"remainder {tail} after {t} is not below [{t.m},{t.l}]^{t.dim - 1}"
        tail += t.value
    return None


def pcr_decompose(n: int, d: int) -> Pcr:
    """Greedy d-PCR of ``n``: peel off the largest pseudo cubic, drop a dimension."""
    if n < 1 or d < 1:
        raise DomainError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    terms = []
    rest, dim = n, d
    while rest:
        m, l, value = _leading(rest, dim)
        terms.append(_trusted_term(m, l, dim))
        rest -= value
        dim -= 1
    return Pcr(tuple(terms), n, d)


def pcr_value(p: Pcr) -> int:
    return sum(t.value for t in p.terms)


def pcr_compare(a: Pcr, b: Pcr) -> int:
    """Return -1, 0 or 1 by lexicographic order of the padded ``(m, l)`` lists."""
    if a.d != b.d:
        raise DomainError(f"cannot compare a {a.d}-PCR with a {b.d}-PCR")
    ka, kb = a.key(), b.key()
    return (ka > kb) - (ka < kb)


def cubic_neighbors(
    n: int, d: int
) -> tuple[PseudoCubicTerm, PseudoCubicTerm, PseudoCubicTerm]:
    """Consecutive pseudo d-cubics around ``n`` and their difference.

    Returns ``(pred, succ, delta)`` with ``pred <= n < succ`` and
    ``succ - pred == delta``; ``delta`` is ``[m,l]^(d-1)`` left unnormalized.
    """
    m, l = leading_pair(n, d)
    pred = PseudoCubicTerm(m, l, d)
    succ = normalize_term(PseudoCubicTerm(m, l + 1, d))
    delta = PseudoCubicTerm(m, l, d - 1)
    return pred, succ, delta
