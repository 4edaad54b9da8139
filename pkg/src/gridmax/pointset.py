"""Finite point sets in N^d and the gravity (compression) operators.

Coordinates are 1-based. Two points are adjacent when their Manhattan
distance is 1. Axes are numbered ``1..d`` in every public function.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from gridmax.errors import DomainError

__all__ = [
    "PointSet",
    "edge_count",
    "projection",
    "projection_count",
    "gravity_axis",
    "gravity_total",
    "is_nested",
    "is_fully_nested",
    "heights_and_areas",
    "bollobas_thomason_holds",
    "permute_axes",
]

Point = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class PointSet:
    """An immutable set of d-tuples of positive integers.

    ``points`` is a frozenset, which doubles as the membership index.
    """

    d: int
    points: frozenset[Point]

    def __init__(self, d: int, points: Iterable[Sequence[int]] = ()) -> None:
        if d < 1:
            raise DomainError(f"dimension must be >= 1, got {d}")
        pts = frozenset(tuple(int(c) for c in p) for p in points)
        for p in pts:
            if len(p) != d:
                raise DomainError(f"point {p} does not have {d} coordinates")
            if min(p) < 1:
                raise DomainError(f"point {p} has a coordinate below 1")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "points", pts)

    @classmethod
    def _trusted(cls, d: int, points: frozenset[Point]) -> PointSet:
        obj = object.__new__(cls)
        object.__setattr__(obj, "d", d)
        object.__setattr__(obj, "points", points)
        return obj

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self.points

    def sorted_points(self) -> list[Point]:
        return sorted(self.points)

    def to_dict(self) -> dict:
        return {"d": self.d, "points": [list(p) for p in self.sorted_points()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> PointSet:
        try:
            d = doc["d"]
            raw = doc["points"]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"point set document lacks 'd' or 'points': {exc}") from None
        if not isinstance(d, int) or not isinstance(raw, list):
            raise DomainError("'d' must be an integer and 'points' a list")
        pts = [tuple(p) for p in raw]
        if len(set(pts)) != len(pts):
            raise DomainError("duplicate points in document")
        return cls(d, pts)

    @classmethod
    def from_json(cls, text: str) -> PointSet:
        return cls.from_dict(json.loads(text))


def edge_count(s: PointSet) -> int:
    """Number of adjacent pairs, found by probing each point's +1 neighbours."""
    pts = s.points
    total = 0
    for p in pts:
        for i in range(s.d):
            q = p[:i] + (p[i] + 1,) + p[i + 1 :]
            if q in pts:
                total += 1
    return total


def _check_axis(s: PointSet, axis: int) -> None:
    if not 1 <= axis <= s.d:
        raise DomainError(f"axis {axis} out of range 1..{s.d}")


def projection(s: PointSet, keep: Iterable[int]) -> PointSet:
    """Image of ``s`` under the projection onto the axes in ``keep``."""
    axes = sorted(set(keep))
    if not axes:
        raise DomainError("projection needs at least one axis")
    for a in axes:
        _check_axis(s, a)
    idx = [a - 1 for a in axes]
    return PointSet._trusted(len(idx), frozenset(tuple(p[i] for i in idx) for p in s.points))


def _drop(p: Point, i: int) -> Point:
    return p[:i] + p[i + 1 :]


def projection_count(s: PointSet, omit: int) -> int:
    """Size of the projection of ``s`` that forgets axis ``omit``."""
    _check_axis(s, omit)
    i = omit - 1
    return len({_drop(p, i) for p in s.points})


def gravity_axis(s: PointSet, axis: int) -> PointSet:
    """Pull every line parallel to ``axis`` down onto coordinates ``1..k``.

    Points of a line keep their relative order along the axis.
    """
    _check_axis(s, axis)
    i = axis - 1
    fibers: dict[Point, list[int]] = defaultdict(list)
    for p in s.points:
        fibers[_drop(p, i)].append(p[i])
    out = set()
    for base, coords in fibers.items():
        head, tail = base[:i], base[i:]
        for rank in range(1, len(coords) + 1):
            out.add(head + (rank,) + tail)
    return PointSet._trusted(s.d, frozenset(out))


def gravity_total(s: PointSet) -> PointSet:
    """Apply gravity along axis d first, then d-1, and so on down to axis 1."""
    for axis in range(s.d, 0, -1):
        s = gravity_axis(s, axis)
    return s


def is_nested(s: PointSet, axis: int) -> bool:
    """Whether the slices perpendicular to ``axis`` shrink as the coordinate grows.

    Checked directly on the slices, without going through gravity.
    """
    _check_axis(s, axis)
    if not s.points:
        return True
    i = axis - 1
    slices: dict[int, set[Point]] = defaultdict(set)
    for p in s.points:
        slices[p[i]].add(_drop(p, i))
    prev = slices.get(1, set())
    for k in range(2, max(slices) + 1):
        cur = slices.get(k, set())
        if not cur <= prev:
            return False
        prev = cur
    return True


def is_fully_nested(s: PointSet) -> bool:
    return all(is_nested(s, axis) for axis in range(1, s.d + 1))


def heights_and_areas(s: PointSet) -> list[tuple[int, int]]:
    """Per axis: the largest coordinate ``h`` and the size of the layer at ``h``.

    For a fully nested set the largest coordinate equals the number of
    distinct coordinates; for other sets the two can differ and the maximum
    is what is reported.
    """
    if not s.points:
        raise DomainError("heights and areas are undefined for the empty set")
    out = []
    for i in range(s.d):
        h = max(p[i] for p in s.points)
        out.append((h, sum(1 for p in s.points if p[i] == h)))
    return out


def bollobas_thomason_holds(s: PointSet) -> bool:
    """``|s|**(d-1) <= product of the d codimension-one projection sizes``."""
    if not s.points:
        raise DomainError("the projection inequality is stated for non-empty sets")
    product = math.prod(projection_count(s, a) for a in range(1, s.d + 1))
    return len(s) ** (s.d - 1) <= product


def permute_axes(s: PointSet, perm: Sequence[int]) -> PointSet:
    """Relabel axes: new axis ``j`` carries old axis ``perm[j-1]``."""
    if sorted(perm) != list(range(1, s.d + 1)):
        raise DomainError(f"{perm} is not a permutation of 1..{s.d}")
    idx = [a - 1 for a in perm]
    return PointSet._trusted(s.d, frozenset(tuple(p[i] for i in idx) for p in s.points))
