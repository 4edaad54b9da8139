"""Canonical optimal point sets: pseudo cubes and cubicles.

``build_cubicle(n, d)`` places the leading pseudo cube of the d-PCR of ``n``
at the origin corner and stacks the (d-1)-cubicle of the remainder on the
face ``x_{l+1} = m + 1``.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from gridmax.errors import DomainError
from gridmax.pcr import Pcr, PseudoCubicTerm, normalize_term, pcr_decompose
from gridmax.pointset import PointSet, edge_count, projection

__all__ = ["Cubicle", "pseudo_cube", "lift", "build_cubicle", "side"]


@dataclass(frozen=True, slots=True)
class Cubicle:
    pointset: PointSet
    pcr: Pcr
    n: int
    d: int

    def to_dict(self) -> dict:
        doc = self.pointset.to_dict()
        doc["pcr"] = [[t.m, t.l, t.dim] for t in self.pcr.terms]
        doc["edges"] = edge_count(self.pointset)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def pseudo_cube(m: int, l: int, d: int) -> PointSet:
    """The box ``[m+1]^l x [m]^(d-l)``, first ``l`` axes the long ones."""
    term = normalize_term(PseudoCubicTerm(m, l, d))
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    sides = [range(1, term.m + 2)] * term.l + [range(1, term.m + 1)] * (d - term.l)
    return PointSet._trusted(d, frozenset(itertools.product(*sides)))


def lift(s: PointSet, fixed_axes: Iterable[int], anchor: Sequence[int]) -> PointSet:
    """Embed ``s`` into ``s.d + len(fixed_axes)`` dimensions.

    The axes in ``fixed_axes`` (1-based, in the target space) are pinned to
    the values of ``anchor``, listed in increasing axis order; the other
    coordinates are copied from ``s`` in order.
    """
    axes = sorted(set(fixed_axes))
    anchor = tuple(anchor)
    if len(axes) != len(anchor):
        raise DomainError(f"{len(axes)} fixed axes but {len(anchor)} anchor values")
    if any(a < 1 for a in anchor):
        raise DomainError(f"anchor {anchor} has a coordinate below 1")
    d = s.d + len(axes)
    if axes and not 1 <= axes[0] <= axes[-1] <= d:
        raise DomainError(f"fixed axes {axes} out of range 1..{d}")
    pinned = dict(zip(axes, anchor))
    out = []
    for p in s.points:
        free = iter(p)
        out.append(tuple(pinned[a] if a in pinned else next(free) for a in range(1, d + 1)))
    return PointSet._trusted(d, frozenset(out))


def _cubicle_points(n: int, d: int) -> frozenset:
    if n == 0:
        return frozenset()
    p = pcr_decompose(n, d)
    lead = p.terms[0]
    box = pseudo_cube(lead.m, lead.l, d).points
    rest = n - lead.value
    if not rest:
        return box
    below = PointSet._trusted(d - 1, _cubicle_points(rest, d - 1))
    return box | lift(below, [lead.l + 1], [lead.m + 1]).points


def build_cubicle(n: int, d: int) -> Cubicle:
    """The d-cubicle of order ``n``; ``n = 0`` gives the empty cubicle."""
    if n < 0 or d < 1:
        raise DomainError(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    pcr = pcr_decompose(n, d) if n else Pcr.empty(d)
    return Cubicle(PointSet._trusted(d, _cubicle_points(n, d)), pcr, n, d)


def side(c: Cubicle, axis: int) -> PointSet:
    """Projection of the cubicle forgetting ``axis``; itself a (d-1)-cubicle."""
    if not 1 <= axis <= c.d:
        raise DomainError(f"axis {axis} out of range 1..{c.d}")
    if c.d == 1:
        raise DomainError("a 1-dimensional cubicle has no lower-dimensional side")
    return projection(c.pointset, [a for a in range(1, c.d + 1) if a != axis])
