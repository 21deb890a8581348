"""Spherical primitives: points, great circles, distances, arcs, bisectors, incenters."""

import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import numpy as np

from .errors import CoincidentCircles, DegenerateInput, NoTriangle

# Single tolerance for unit norms and all geometric predicates
UNIT_TOL = 1e-12

# Three incircle distances must agree to this
EQUIDISTANCE_TOL = 1e-10


@dataclass(frozen=True)
class SpherePoint:
    """Unit vector in R^3 standing for a similarity class of triangles."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        norm_sq = self.x * self.x + self.y * self.y + self.z * self.z
        if not abs(norm_sq - 1.0) <= UNIT_TOL:
            raise DegenerateInput(
                f"SpherePoint must be unit, got |v|^2={norm_sq!r} for ({self.x}, {self.y}, {self.z})"
            )

    @classmethod
    def from_array(cls, v) -> "SpherePoint":
        return cls(float(v[0]), float(v[1]), float(v[2]))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=np.float64)

    def dot(self, other: "SpherePoint") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "SpherePoint") -> np.ndarray:
        return np.cross(self.as_array(), other.as_array())

    def __neg__(self) -> "SpherePoint":
        return SpherePoint(-self.x, -self.y, -self.z)

    def __iter__(self) -> Iterator[float]:
        return iter((self.x, self.y, self.z))


@dataclass(frozen=True)
class GreatCircle:
    """Oriented great circle, stored as the unit normal of its plane.

    Regions bounded by great circles store their circles with normals
    pointing into the region (positive dot product on the interior).
    """

    normal: SpherePoint

    @classmethod
    def from_plane(cls, a: float, b: float, c: float) -> "GreatCircle":
        """Great circle a*x + b*y + c*z = 0, oriented by (a, b, c)."""
        return cls(normalize((a, b, c)))

    def reversed(self) -> "GreatCircle":
        return GreatCircle(-self.normal)

    def contains(self, p: SpherePoint, tol: float = UNIT_TOL) -> bool:
        return abs(p.dot(self.normal)) <= tol


@dataclass(frozen=True)
class ArcParametrization:
    """Great-circle arc p(t) = cos t * u1 + sin t * u2 with u1, u2 orthonormal."""

    u1: SpherePoint
    u2: SpherePoint

    def __post_init__(self):
        if abs(self.u1.dot(self.u2)) > UNIT_TOL:
            raise DegenerateInput(f"Arc vectors are not orthogonal (u1.u2={self.u1.dot(self.u2)!r})")

    @property
    def circle(self) -> GreatCircle:
        """The great circle carrying the arc."""
        return GreatCircle(normalize(np.cross(self.u1.as_array(), self.u2.as_array())))


def normalize(v: Sequence[float]) -> SpherePoint:
    """Scale a nonzero 3-vector to unit length."""
    arr = np.asarray(v, dtype=np.float64)
    norm = float(np.linalg.norm(arr))
    if not norm > 0.0 or not math.isfinite(norm):
        raise DegenerateInput(f"Cannot normalize vector {tuple(arr.tolist())}")
    arr = arr / norm
    return SpherePoint(float(arr[0]), float(arr[1]), float(arr[2]))


def geodesic_distance(p: SpherePoint, q: SpherePoint) -> float:
    """Great-circle distance in [0, pi].

    Evaluated as atan2(|p x q|, p.q), which equals arccos(p.q) on unit
    vectors and keeps full precision for nearly coincident points.
    """
    a = p.as_array()
    b = q.as_array()
    cross = float(np.linalg.norm(np.cross(a, b)))
    dot = max(-1.0, min(1.0, float(a @ b)))
    return math.atan2(cross, dot)


def geodesic_distance_many(p: np.ndarray, qs: np.ndarray) -> np.ndarray:
    """Distances from one point (3,) to many points (n, 3)."""
    cross = np.linalg.norm(np.cross(qs, p), axis=-1)
    dot = np.clip(qs @ p, -1.0, 1.0)
    return np.arctan2(cross, dot)


def point_circle_distance(p: SpherePoint, c: GreatCircle) -> float:
    """Minimum geodesic distance from p to the circle: arcsin(|p.n|)."""
    s = min(1.0, abs(p.dot(c.normal)))
    return math.asin(s)


def bisector(c1: GreatCircle, c2: GreatCircle) -> GreatCircle:
    """Great circle with normal n1 + n2, equidistant from c1 and c2.

    For two circles oriented into a common region the internal bisector
    is bisector(c1, c2.reversed()); see internal_bisector.
    """
    n1 = c1.normal.as_array()
    n2 = c2.normal.as_array()
    if abs(float(n1 @ n2)) >= 1.0 - UNIT_TOL:
        raise CoincidentCircles("Bisector undefined for circles in the same plane")
    return GreatCircle(normalize(n1 + n2))


def internal_bisector(c1: GreatCircle, c2: GreatCircle) -> GreatCircle:
    """Bisector through the region where both inward normals are positive."""
    return bisector(c1, c2.reversed())


def intersect(c1: GreatCircle, c2: GreatCircle) -> Tuple[SpherePoint, SpherePoint]:
    """The antipodal pair +-normalize(n1 x n2)."""
    n1 = c1.normal.as_array()
    n2 = c2.normal.as_array()
    if abs(float(n1 @ n2)) >= 1.0 - UNIT_TOL:
        raise CoincidentCircles("Intersection undefined for circles in the same plane")
    p = normalize(np.cross(n1, n2))
    return p, -p


def arc_point(arc: ArcParametrization, t: float) -> SpherePoint:
    return SpherePoint.from_array(math.cos(t) * arc.u1.as_array() + math.sin(t) * arc.u2.as_array())


def arc_points(arc: ArcParametrization, ts: np.ndarray) -> np.ndarray:
    """Vectorized arc_point: (n,) parameters -> (n, 3) points."""
    ts = np.asarray(ts, dtype=np.float64)
    return np.outer(np.cos(ts), arc.u1.as_array()) + np.outer(np.sin(ts), arc.u2.as_array())


def incenter_of_circular_triangle(
    c1: GreatCircle, c2: GreatCircle, c3: GreatCircle
) -> Tuple[SpherePoint, float]:
    """Incenter and inradius of the spherical triangle bounded by three circles.

    Normals must point into the triangle. The incenter is where the
    internal bisectors meet; of the two antipodal candidates the one on the
    positive side of all three circles is returned.
    """
    try:
        b12 = internal_bisector(c1, c2)
        b23 = internal_bisector(c2, c3)
        candidates = intersect(b12, b23)
    except CoincidentCircles as e:
        raise NoTriangle(f"Circles do not bound a triangle: {e}") from e

    circles = (c1, c2, c3)
    inside = [p for p in candidates if all(p.dot(c.normal) > UNIT_TOL for c in circles)]
    if not inside:
        raise NoTriangle("No point lies on the inner side of all three circles")

    center = inside[0]
    radii = [point_circle_distance(center, c) for c in circles]
    if max(radii) - min(radii) > EQUIDISTANCE_TOL:
        raise NoTriangle(f"Bisectors do not meet at an equidistant point (radii={radii})")
    return center, min(radii)


def circle_points(c: GreatCircle, samples: int) -> np.ndarray:
    """`samples` equally spaced points (n, 3) around a great circle."""
    n = c.normal.as_array()
    # any axis not parallel to n
    axis = np.eye(3)[int(np.argmin(np.abs(n)))]
    u1 = np.cross(n, axis)
    u1 /= np.linalg.norm(u1)
    u2 = np.cross(n, u1)
    theta = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    return np.outer(np.cos(theta), u1) + np.outer(np.sin(theta), u2)
