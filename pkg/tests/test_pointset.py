from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridmax.cubicle import build_cubicle
from gridmax.errors import DomainError
from gridmax.formula import projection_lower_bound
from gridmax.pcr import cubic_value
from gridmax.pointset import (
    PointSet,
    bollobas_thomason_holds,
    edge_count,
    gravity_axis,
    gravity_total,
    heights_and_areas,
    is_fully_nested,
    is_nested,
    permute_axes,
    projection,
    projection_count,
)

SQUARE = PointSet(2, [(1, 1), (1, 2), (2, 1), (2, 2)])


@st.composite
def point_sets(draw, max_d=4, max_size=30, max_side=6):
    d = draw(st.integers(1, max_d))
    side = draw(st.integers(1, max_side))
    cell = st.tuples(*[st.integers(1, side)] * d)
    pts = draw(st.sets(cell, max_size=max_size))
    return PointSet(d, pts)


# -- construction and serialization -----------------------------------------


def test_construction_validates():
    with pytest.raises(DomainError):
        PointSet(0, [])
    with pytest.raises(DomainError):
        PointSet(2, [(1, 0)])
    with pytest.raises(DomainError):
        PointSet(2, [(1, 1, 1)])


def test_points_deduplicated_and_hashable():
    s = PointSet(2, [(1, 1), (1, 1), (2, 1)])
    assert len(s) == 2
    assert (2, 1) in s and (3, 1) not in s
    assert s == PointSet(2, [(2, 1), (1, 1)])
    assert hash(s) == hash(PointSet(2, [(2, 1), (1, 1)]))


def test_json_canonical():
    s = PointSet(2, [(2, 1), (1, 2), (1, 1)])
    assert s.to_json() == '{"d": 2, "points": [[1, 1], [1, 2], [2, 1]]}'
    assert PointSet.from_json(s.to_json()) == s


def test_json_rejects_duplicates_and_garbage():
    with pytest.raises(DomainError):
        PointSet.from_json('{"d": 2, "points": [[1, 1], [1, 1]]}')
    with pytest.raises(DomainError):
        PointSet.from_dict({"points": []})
    with pytest.raises(DomainError):
        PointSet.from_dict({"d": "2", "points": []})


@given(point_sets())
def test_json_round_trip(s):
    assert PointSet.from_json(s.to_json()) == s
    assert json.loads(s.to_json())["points"] == [list(p) for p in sorted(s.points)]


# -- edge counting and projections ------------------------------------------


def _edges_pairwise(s: PointSet) -> int:
    return sum(
        1 for p, q in itertools.combinations(s.points, 2) if sum(abs(a - b) for a, b in zip(p, q)) == 1
    )


def test_edge_count_examples():
    assert edge_count(SQUARE) == 4
    assert edge_count(PointSet(3, [(k, 1, 1) for k in range(1, 8)])) == 6
    assert edge_count(build_cubicle(13, 3).pointset) == 21
    assert edge_count(PointSet(2, [])) == 0


@given(point_sets())
def test_edge_count_matches_pairwise(s):
    assert edge_count(s) == _edges_pairwise(s)


def test_projection_examples():
    s = PointSet(2, [(1, 1), (2, 1), (2, 2)])
    assert projection(s, [1]) == PointSet(1, [(1,), (2,)])
    assert projection(s, [2]) == PointSet(1, [(1,), (2,)])
    assert projection(s, [1, 2]) == s
    with pytest.raises(DomainError):
        projection(s, [3])
    with pytest.raises(DomainError):
        projection(s, [])


def test_projection_count_examples():
    assert projection_count(SQUARE, 1) == 2
    path = PointSet(2, [(k, 1) for k in range(1, 6)])
    assert projection_count(path, 1) == 1
    c = build_cubicle(13, 3).pointset
    # the layer x_3 = 1 is the 7-point 2-cubicle, so forgetting axis 3 leaves 7
    assert projection_count(c, 3) == 7
    assert projection_count(c, 2) == 6
    with pytest.raises(DomainError):
        projection_count(c, 4)


# -- gravity ----------------------------------------------------------------


def test_gravity_axis_examples():
    assert gravity_axis(PointSet(2, [(2, 1), (1, 2)]), 1) == PointSet(2, [(1, 1), (1, 2)])
    assert gravity_axis(PointSet(2, [(1, 1), (3, 1), (5, 1)]), 1) == PointSet(
        2, [(1, 1), (2, 1), (3, 1)]
    )
    nested = PointSet(2, [(1, 1), (2, 1), (1, 2)])
    assert gravity_axis(nested, 1) == nested
    with pytest.raises(DomainError):
        gravity_axis(nested, 0)


def test_gravity_total_examples():
    assert gravity_total(SQUARE) == SQUARE
    assert gravity_total(PointSet(2, [(2, 2)])) == PointSet(2, [(1, 1)])
    s = PointSet(2, [(1, 3), (2, 1), (3, 2), (3, 3)])
    g = gravity_total(s)
    assert len(g) == 4
    assert is_fully_nested(g)
    assert edge_count(g) >= edge_count(s)
    assert g == PointSet(2, [(1, 1), (1, 2), (2, 1), (3, 1)])


def test_gravity_does_not_commute():
    s = PointSet(2, [(1, 2), (2, 1)])
    a = gravity_axis(gravity_axis(s, 2), 1)
    b = gravity_axis(gravity_axis(s, 1), 2)
    assert a == PointSet(2, [(1, 1), (2, 1)])
    assert b == PointSet(2, [(1, 1), (1, 2)])
    assert a != b


@settings(max_examples=300)
@given(point_sets())
def test_gravity_properties(s):
    total = gravity_total(s)
    assert len(total) == len(s)
    for axis in range(1, s.d + 1):
        g = gravity_axis(s, axis)
        assert len(g) == len(s)
        assert edge_count(g) >= edge_count(s)
        assert gravity_axis(g, axis) == g
        assert is_nested(g, axis)
        assert is_nested(s, axis) == (g == s)
        assert gravity_axis(total, axis) == total
    assert is_fully_nested(total)
    assert is_fully_nested(s) == (total == s)


# -- nestedness -------------------------------------------------------------


def test_is_nested_examples():
    assert is_nested(PointSet(2, [(1, 1), (1, 2), (2, 1)]), 1)
    assert not is_nested(PointSet(2, [(1, 1), (2, 2)]), 1)
    assert not is_nested(PointSet(2, [(2, 1)]), 1)


def test_is_fully_nested_examples():
    assert not is_fully_nested(PointSet(2, [(1, 1), (2, 2)]))
    assert is_fully_nested(PointSet(3, []))
    for d in range(1, 5):
        for n in range(0, 101):
            assert is_fully_nested(build_cubicle(n, d).pointset)


@settings(max_examples=300)
@given(point_sets())
def test_fully_nested_exact_edge_count(s):
    g = gravity_total(s)
    assert edge_count(g) == g.d * len(g) - sum(projection_count(g, i) for i in range(1, g.d + 1))


@settings(max_examples=200)
@given(point_sets(), st.data())
def test_permutation_invariance(s, data):
    perm = data.draw(st.permutations(range(1, s.d + 1)))
    t = permute_axes(s, perm)
    assert edge_count(t) == edge_count(s)
    assert is_fully_nested(t) == is_fully_nested(s)
    g = gravity_total(s)
    assert is_fully_nested(permute_axes(g, perm))


def test_permute_axes_rejects():
    with pytest.raises(DomainError):
        permute_axes(SQUARE, [1, 1])


# -- heights, areas, projection inequality ----------------------------------


def test_heights_and_areas_examples():
    assert heights_and_areas(SQUARE) == [(2, 2), (2, 2)]
    assert heights_and_areas(build_cubicle(5, 2).pointset) == [(3, 1), (2, 2)]
    assert heights_and_areas(PointSet(4, [(1, 1, 1, 1)])) == [(1, 1)] * 4
    with pytest.raises(DomainError):
        heights_and_areas(PointSet(2, []))


@settings(max_examples=300)
@given(point_sets())
def test_height_bound_on_nested_sets(s):
    g = gravity_total(s)
    if len(g):
        for h, a in heights_and_areas(g):
            assert len(g) >= h * a


def test_bollobas_thomason_boxes_are_tight():
    for sides in [(1,), (3, 2), (2, 3, 4), (2, 2, 1, 3)]:
        box = PointSet(len(sides), itertools.product(*[range(1, k + 1) for k in sides]))
        prod = 1
        for i in range(1, len(sides) + 1):
            prod *= projection_count(box, i)
        assert len(box) ** (box.d - 1) == prod
        assert bollobas_thomason_holds(box)
    with pytest.raises(DomainError):
        bollobas_thomason_holds(PointSet(2, []))


@settings(max_examples=300)
@given(point_sets())
def test_bollobas_thomason_random(s):
    if len(s):
        assert bollobas_thomason_holds(s)


@settings(max_examples=200)
@given(st.data())
def test_projection_sum_bound(data):
    d = data.draw(st.integers(1, 4))
    m = data.draw(st.integers(1, 3))
    l = data.draw(st.integers(0, d - 1))
    n = cubic_value(m, l, d)
    side = data.draw(st.integers(m + 1, m + 4))
    cells = list(itertools.product(range(1, side + 1), repeat=d))
    pts = data.draw(st.permutations(cells))[:n]
    s = PointSet(d, pts)
    assert sum(projection_count(s, i) for i in range(1, d + 1)) >= projection_lower_bound(m, l, d)
