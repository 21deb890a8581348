"""Tests for coordinates, classification and B3 (engines/triangle_space.py)."""

import itertools
import math
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

_project_root = Path(__file__).parent.parent
sys.path.insert(0, str(_project_root))

from engines.errors import DegenerateInput, NotATriangle
from engines.sphere_geom import SpherePoint, geodesic_distance, normalize
from engines.triangle_space import (
    SCoords,
    SignedPermutation,
    TriangleSides,
    angles,
    apply,
    apply_many,
    b3_elements,
    canonicalize,
    check_triangle,
    classify,
    classify_many,
    in_fundamental_domain,
    in_ordered_domain,
    normalize_perimeter,
    orbit,
    point_from_sides,
    s_coords,
    side_ratio,
    sign_orbit,
    sides_from_point,
    sides_from_points,
    sides_from_s_coords,
)

R5 = math.sqrt(5.0)

_coord = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
_points = st.tuples(_coord, _coord, _coord).filter(lambda v: sum(c * c for c in v) > 1e-3).map(normalize)


def _random_points(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, 3))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


# ---------------------------------------------------------------------------
# Coordinate maps
# ---------------------------------------------------------------------------

class TestNormalizePerimeter:
    def test_scales_to_two(self):
        t = normalize_perimeter(3, 4, 5)
        assert t.perimeter == pytest.approx(2.0)
        assert t.as_tuple() == pytest.approx((0.5, 2 / 3, 5 / 6))

    def test_zero_perimeter_raises(self):
        with pytest.raises(DegenerateInput):
            normalize_perimeter(0, 0, 0)

    def test_negative_side_raises(self):
        with pytest.raises(DegenerateInput):
            normalize_perimeter(1, -1, 1)


class TestSCoords:
    def test_sum_to_one(self):
        s = s_coords(normalize_perimeter(3, 4, 5))
        assert sum(s.as_tuple()) == pytest.approx(1.0)
        assert s.s_a == pytest.approx(0.5)

    def test_inverse(self):
        t = normalize_perimeter(2, 3, 4)
        assert sides_from_s_coords(s_coords(t)).as_tuple() == pytest.approx(t.as_tuple())

    def test_triangle_inequality_violation(self):
        with pytest.raises(NotATriangle):
            s_coords(normalize_perimeter(1, 1, 3))

    def test_unnormalized_perimeter(self):
        with pytest.raises(NotATriangle, match="Perimeter"):
            check_triangle(TriangleSides(3, 4, 5))

    def test_s_coords_dataclass(self):
        assert SCoords(0.2, 0.3, 0.5).as_tuple() == (0.2, 0.3, 0.5)


class TestPointFromSides:
    def test_one_four_five(self):
        p = point_from_sides(normalize_perimeter(1, 4, 5))
        assert p.as_array() == pytest.approx([2 / R5, 1 / R5, 0.0], abs=1e-15)

    def test_equilateral(self):
        p = point_from_sides(TriangleSides(2 / 3, 2 / 3, 2 / 3))
        assert p.as_array() == pytest.approx([1 / math.sqrt(3)] * 3, abs=1e-15)

    def test_sides_from_point(self):
        t = sides_from_point(SpherePoint(2 / R5, 1 / R5, 0.0))
        assert t.as_tuple() == pytest.approx((0.2, 0.8, 1.0), abs=1e-15)

    def test_sides_round_trip_on_ten_thousand_triangles(self):
        sides = sides_from_points(_random_points(10000, 1))
        worst = 0.0
        for row in sides:
            t = TriangleSides(*row.tolist())
            back = sides_from_point(point_from_sides(t))
            worst = max(worst, max(abs(u - v) for u, v in zip(back, t)))
        assert worst < 1e-12

    @given(_points)
    def test_point_round_trip_in_positive_octant(self, p):
        q = SpherePoint(abs(p.x), abs(p.y), abs(p.z))
        back = point_from_sides(sides_from_point(q))
        # sqrt amplifies rounding in tiny coordinates: compare squares
        assert np.square(back.as_array()) == pytest.approx(np.square(q.as_array()), abs=1e-12)

    def test_side_ratio(self):
        assert side_ratio(normalize_perimeter(1, 4, 5)) == pytest.approx((1.0, 4.0, 5.0))

    def test_side_ratio_zero_side(self):
        with pytest.raises(DegenerateInput):
            side_ratio(TriangleSides(0.0, 1.0, 1.0))


class TestAngles:
    def test_right_triangle(self):
        a, b, c = angles(normalize_perimeter(3, 4, 5))
        assert c == pytest.approx(math.pi / 2)
        assert a + b + c == pytest.approx(math.pi)

    def test_equilateral(self):
        assert angles(TriangleSides(2 / 3, 2 / 3, 2 / 3)) == pytest.approx((math.pi / 3,) * 3)

    def test_doubly_degenerate_limit(self):
        assert angles(TriangleSides(0.0, 1.0, 1.0)) == (0.0, math.pi / 2, math.pi / 2)

    def test_degenerate_has_straight_angle(self):
        assert max(angles(normalize_perimeter(1, 4, 5))) == pytest.approx(math.pi)

    def test_degenerate_angles_are_exact(self):
        assert angles(normalize_perimeter(1, 4, 5)) == (0.0, 0.0, math.pi)

    def test_matches_law_of_cosines(self):
        a, b, c = normalize_perimeter(4, 5, 6)
        expected = math.acos((b * b + c * c - a * a) / (2 * b * c))
        assert angles(TriangleSides(a, b, c))[0] == pytest.approx(expected, abs=1e-14)

    @given(_points)
    def test_angles_sum_to_pi(self, p):
        sides = sides_from_point(p)
        if min(abs(p.x), abs(p.y), abs(p.z)) > 1e-3:
            assert sum(angles(sides)) == pytest.approx(math.pi, abs=1e-12)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

class TestClassify:
    def test_three_four_five(self):
        assert classify(normalize_perimeter(3, 4, 5)).labels() == ["scalene", "right"]

    def test_equilateral(self):
        flags = classify(TriangleSides(2 / 3, 2 / 3, 2 / 3))
        assert "equilateral" in flags and "acute" in flags and "isosceles" in flags

    def test_least_symmetric_obtuse_sides(self):
        assert str(classify(TriangleSides(0.332032, 0.705733, 0.962234))) == "scalene obtuse"

    def test_degenerate_has_no_angle_flag(self):
        flags = classify(normalize_perimeter(1, 4, 5))
        assert flags.labels() == ["scalene", "degenerate"]

    def test_doubly_degenerate(self):
        flags = classify(TriangleSides(0.0, 1.0, 1.0))
        assert flags.labels() == ["isosceles", "degenerate", "doubly_degenerate"]

    def test_tolerance_widens_isosceles(self):
        t = TriangleSides(0.6, 0.7 - 1e-6, 0.7 + 1e-6)
        assert "isosceles" not in classify(t)
        assert "isosceles" in classify(t, tol=1e-5)

    def test_vectorized_agrees(self):
        sides = sides_from_points(_random_points(500, 2))
        sides = np.vstack([sides, [[0.5, 2 / 3, 5 / 6], [2 / 3, 2 / 3, 2 / 3], [0.2, 0.8, 1.0]]])
        masks = classify_many(sides)
        for k, row in enumerate(sides):
            flags = classify(TriangleSides(*row.tolist()))
            for flag, mask in masks.items():
                assert bool(mask[k]) == (flag in flags), (flag, row)


# ---------------------------------------------------------------------------
# B3
# ---------------------------------------------------------------------------

class TestGroup:
    def test_forty_eight_distinct_elements(self):
        elements = b3_elements()
        assert len(elements) == 48
        assert len(set(elements)) == 48
        assert elements[0] == SignedPermutation.identity()

    def test_closed_under_composition_and_matrix_product(self):
        elements = set(b3_elements())
        for g, h in itertools.product(elements, repeat=2):
            gh = g * h
            assert gh in elements
            assert np.array_equal(gh.matrix(), g.matrix() @ h.matrix())

    def test_inverses(self):
        ident = SignedPermutation.identity()
        for g in b3_elements():
            assert g * g.inverse() == ident
            assert g.inverse() * g == ident

    def test_matrices_orthogonal(self):
        for g in b3_elements():
            m = g.matrix()
            assert np.array_equal(m @ m.T, np.eye(3, dtype=np.int64))

    def test_element_orders(self):
        orders = sorted(g.order() for g in b3_elements())
        assert set(orders) == {1, 2, 3, 4, 6}
        assert orders.count(1) == 1

    def test_invalid_elements(self):
        with pytest.raises(ValueError):
            SignedPermutation((0, 0, 1), (1, 1, 1))
        with pytest.raises(ValueError):
            SignedPermutation((0, 1, 2), (1, 2, 1))

    def test_apply_matches_matrix_and_compose(self):
        p = normalize((0.3, -0.5, 0.81))
        elements = b3_elements()
        for g in elements:
            assert apply(g, p).as_array() == pytest.approx(g.matrix() @ p.as_array(), abs=0)
        for g, h in itertools.product(elements[:12], elements[30:]):
            assert apply(g * h, p) == apply(g, apply(h, p))

    def test_apply_many_matches_apply(self):
        pts = _random_points(10, 3)
        for g in b3_elements():
            images = apply_many(g, pts)
            for p, q in zip(pts, images):
                assert np.array_equal(apply(g, SpherePoint.from_array(p)).as_array(), q)

    @given(_points, _points)
    def test_isometry(self, p, q):
        d = geodesic_distance(p, q)
        for g in b3_elements()[::7]:
            assert geodesic_distance(apply(g, p), apply(g, q)) == pytest.approx(d, abs=1e-12)


class TestOrbits:
    def test_generic_orbit_has_48_points(self):
        assert len(orbit(normalize((0.3, 0.5, 0.81)), unique=True)) == 48

    def test_equilateral_orbit_has_8_points(self):
        assert len(orbit(normalize((1, 1, 1)), unique=True)) == 8

    def test_vertex_orbit_has_6_points(self):
        assert len(orbit(SpherePoint(1.0, 0.0, 0.0), unique=True)) == 6

    def test_full_orbit_length(self):
        assert len(orbit(SpherePoint(1.0, 0.0, 0.0))) == 48

    def test_sign_orbit_covers_one_triangle(self):
        p = normalize((0.3, 0.5, 0.81))
        images = sign_orbit(p)
        assert len(images) == 8
        for q in images:
            assert sides_from_point(q).as_tuple() == pytest.approx(sides_from_point(p).as_tuple(), abs=1e-15)


class TestCanonicalize:
    @given(_points)
    def test_lands_in_chamber(self, p):
        q, g = canonicalize(p)
        assert in_fundamental_domain(q, tol=0.0)
        assert apply(g, p) == q

    def test_sorted_absolute_values(self):
        q, _ = canonicalize(normalize((-0.2, 0.9, -0.4)))
        assert q.as_array() == pytest.approx(normalize((0.9, 0.4, 0.2)).as_array(), abs=1e-15)

    def test_fundamental_domain(self):
        assert in_fundamental_domain(normalize((3, 2, 1)))
        assert not in_fundamental_domain(normalize((1, 2, 3)))
        assert not in_fundamental_domain(normalize((3, 2, -1)))

    def test_ordered_domain(self):
        assert in_ordered_domain(SpherePoint(2 / R5, 1 / R5, 0.0))
        assert in_ordered_domain(normalize((3, 2, -1)))
        assert not in_ordered_domain(normalize((3, 1, -2)))

    @given(_points)
    def test_idempotent(self, p):
        q, _ = canonicalize(p)
        again, g = canonicalize(q)
        assert again == q
        assert g == SignedPermutation.identity()

    def test_orbit_has_one_representative(self):
        p = normalize((0.31, -0.52, 0.79))
        rep, _ = canonicalize(p)
        for g in b3_elements():
            q, _ = canonicalize(apply(g, p))
            assert q == rep


class TestSymmetryOfSides:
    def test_group_permutes_sides(self):
        p = normalize((0.3, -0.5, 0.81))
        base = sides_from_point(p).as_tuple()
        for g in b3_elements():
            image = sides_from_point(apply(g, p)).as_tuple()
            assert image == tuple(base[i] for i in g.perm)
            assert sorted(image) == sorted(base)

    def test_classify_ignores_side_order(self):
        rows = sides_from_points(_random_points(200, 12)).tolist()
        rows += [[0.5, 2 / 3, 5 / 6], [2 / 3, 2 / 3, 2 / 3], [0.2, 0.8, 1.0], [0.0, 1.0, 1.0], [0.5, 0.5, 1.0]]
        for row in rows:
            expected = classify(TriangleSides(*row))
            for perm in itertools.permutations(row):
                assert classify(TriangleSides(*perm)) == expected
