"""Symmetry loci on the sphere and geodesic distances to them.

The isosceles triangles lie on six great circles (x = +-y, y = +-z,
z = +-x), the degenerate ones on the three coordinate circles, and the
right triangles on three quartic curves. The quartic with hypotenuse c,

    (1 - x^2)^2 + (1 - y^2)^2 = (1 - z^2)^2,

is parametrized on the positive octant by
q(x) = (x, sqrt((1 - x^2)/(1 + x^2)), x * sqrt((1 - x^2)/(1 + x^2))),
and the whole right locus is the B3 orbit of that branch.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from .errors import OutOfDomain
from .numerics import minimize_bracketed
from .sphere_geom import ArcParametrization, GreatCircle, SpherePoint, arc_point, point_circle_distance
from .triangle_space import SignedPermutation, apply_many, b3_elements

DEFAULT_CURVE_SAMPLES = 256
DEFAULT_MINIMIZE_TOL = 1e-13

# Images whose scanned distance is within this of the best are refined
_REFINE_MARGIN = 0.07

# Local scan minima along one branch within this of the best are refined
_BASIN_MARGIN = 0.01

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class SymmetryLoci:
    """The nine great circles of isosceles and degenerate triangles."""

    isosceles: Tuple[GreatCircle, ...]
    degenerate: Tuple[GreatCircle, ...]

    @property
    def circles(self) -> Tuple[GreatCircle, ...]:
        return self.isosceles + self.degenerate

    def labeled(self) -> List[Tuple[str, GreatCircle]]:
        """(label, circle) pairs, labels written as the plane equation."""
        names = ("x-y", "x+y", "y-z", "y+z", "z-x", "z+x", "x", "y", "z")
        return list(zip(names, self.circles))


@lru_cache(maxsize=1)
def symmetry_loci() -> SymmetryLoci:
    isosceles = (
        GreatCircle.from_plane(1, -1, 0),
        GreatCircle.from_plane(1, 1, 0),
        GreatCircle.from_plane(0, 1, -1),
        GreatCircle.from_plane(0, 1, 1),
        GreatCircle.from_plane(-1, 0, 1),
        GreatCircle.from_plane(1, 0, 1),
    )
    degenerate = (
        GreatCircle.from_plane(1, 0, 0),
        GreatCircle.from_plane(0, 1, 0),
        GreatCircle.from_plane(0, 0, 1),
    )
    return SymmetryLoci(isosceles, degenerate)


@lru_cache(maxsize=1)
def _normals() -> Tuple[np.ndarray, np.ndarray]:
    loci = symmetry_loci()
    iso = np.array([c.normal.as_array() for c in loci.isosceles])
    deg = np.array([c.normal.as_array() for c in loci.degenerate])
    return iso, deg


@dataclass(frozen=True)
class RightCurve:
    """One of the three quartic branches of right triangles.

    `hypotenuse` is the index (0, 1, 2 for a, b, c) of the longest side;
    the other two are the legs.
    """

    hypotenuse: int = 2

    @property
    def legs(self) -> Tuple[int, int]:
        return tuple(i for i in range(3) if i != self.hypotenuse)

    def residual(self, p: SpherePoint) -> float:
        """Left side minus right side of the branch's quartic at p."""
        v = (p.x, p.y, p.z)
        i, j = self.legs
        h = self.hypotenuse
        return (1 - v[i] ** 2) ** 2 + (1 - v[j] ** 2) ** 2 - (1 - v[h] ** 2) ** 2

    def residuals(self, points: np.ndarray) -> np.ndarray:
        s = 1.0 - np.square(points)
        i, j = self.legs
        return s[:, i] ** 2 + s[:, j] ** 2 - s[:, self.hypotenuse] ** 2


RIGHT_CURVES = (RightCurve(0), RightCurve(1), RightCurve(2))


# ---------------------------------------------------------------------------
# Distances to the great-circle loci
# ---------------------------------------------------------------------------

def distance_to_isosceles(p: SpherePoint) -> float:
    return min(point_circle_distance(p, c) for c in symmetry_loci().isosceles)


def distance_to_symmetric(p: SpherePoint) -> float:
    """Distance to the nearest isosceles or degenerate triangle."""
    return min(point_circle_distance(p, c) for c in symmetry_loci().circles)


def distance_to_symmetric_many(points: np.ndarray) -> np.ndarray:
    """Vectorized distance_to_symmetric on (n, 3) points."""
    iso, deg = _normals()
    normals = np.vstack([iso, deg])
    s = np.abs(points @ normals.T).min(axis=1)
    return np.arcsin(np.minimum(s, 1.0))


# ---------------------------------------------------------------------------
# The right-triangle curve
# ---------------------------------------------------------------------------

def right_curve_point(x: float) -> SpherePoint:
    """q(x) on the hypotenuse-c branch; x = 1 gives the doubly-degenerate corner (1, 0, 0)."""
    if not 0.0 <= x <= 1.0:
        raise OutOfDomain(f"Right-curve parameter must lie in [0, 1], got {x!r}")
    y = math.sqrt((1.0 - x * x) / (1.0 + x * x))
    return SpherePoint(x, y, x * y)


def right_curve_points(xs: np.ndarray) -> np.ndarray:
    """Vectorized q(x): (n,) parameters in [0, 1] -> (n, 3) points."""
    xs = np.asarray(xs, dtype=np.float64)
    if xs.size and (xs.min() < 0.0 or xs.max() > 1.0):
        raise OutOfDomain("Right-curve parameters must lie in [0, 1]")
    ys = np.sqrt(np.maximum(1.0 - xs * xs, 0.0) / (1.0 + xs * xs))
    return np.column_stack([xs, ys, xs * ys])


def _branch_samples(samples: int) -> np.ndarray:
    """Branch points at x = 1 - u^2 for u evenly spaced in [0, 1]."""
    u = np.linspace(0.0, 1.0, samples)
    return right_curve_points(1.0 - u * u)


def _branch_distance_fns(p: np.ndarray):
    """Scalar and vectorized u -> geodesic distance from p to q(1 - u^2).

    In u the branch has bounded speed, including at the x = 1 corner.
    """
    px, py, pz = float(p[0]), float(p[1]), float(p[2])

    def f(u: float) -> float:
        x = 1.0 - u * u
        y = math.sqrt(max(1.0 - x * x, 0.0) / (1.0 + x * x))
        z = x * y
        cx = py * z - pz * y
        cy = pz * x - px * z
        cz = px * y - py * x
        return math.atan2(math.sqrt(cx * cx + cy * cy + cz * cz), px * x + py * y + pz * z)

    def f_vec(us: np.ndarray) -> np.ndarray:
        qs = right_curve_points(1.0 - us * us)
        cross = np.linalg.norm(np.cross(qs, p), axis=1)
        return np.arctan2(cross, qs @ p)

    return f, f_vec


def distance_to_branch(
    p: np.ndarray,
    samples: int = DEFAULT_CURVE_SAMPLES,
    tol: float = DEFAULT_MINIMIZE_TOL,
) -> Tuple[float, float]:
    """(distance, x) of the nearest point q(x) on the hypotenuse-c branch."""
    f, f_vec = _branch_distance_fns(np.asarray(p, dtype=np.float64))
    u, d = minimize_bracketed(f, f_vec, 0.0, 1.0, samples, tol, margin=_BASIN_MARGIN)
    return d, 1.0 - u * u


def distance_to_right(
    p: SpherePoint,
    samples: int = DEFAULT_CURVE_SAMPLES,
    tol: float = DEFAULT_MINIMIZE_TOL,
) -> float:
    """Distance from p to the whole right-triangle locus.

    The locus is the B3 orbit of one branch, so this is the minimum over
    all 48 images g(p) of the distance to that branch. All images are
    scanned together; only those whose scan minimum is near the best are
    refined.
    """
    images = np.stack([apply_many(g, p.as_array()) for g in b3_elements()])
    qs = _branch_samples(samples)
    dots = images @ qs.T
    cross = np.linalg.norm(np.cross(images[:, None, :], qs[None, :, :]), axis=2)
    scanned = np.arctan2(cross, dots).min(axis=1)

    best = float(scanned.min())
    candidates = np.nonzero(scanned <= best + _REFINE_MARGIN)[0]
    return min(distance_to_branch(images[k], samples, tol)[0] for k in candidates)


def curve_wall_distance(
    t: float,
    arc: ArcParametrization,
    samples: int = DEFAULT_CURVE_SAMPLES,
    tol: float = DEFAULT_MINIMIZE_TOL,
) -> float:
    """min over x of the distance from arc_point(arc, t) to q(x)."""
    return distance_to_branch(arc_point(arc, t).as_array(), samples, tol)[0]


def right_curve_orbit(samples: int) -> List[Tuple[str, np.ndarray]]:
    """The 24 distinct B3 images of the sampled branch, as labeled polylines.

    Swapping x and y maps the branch onto itself, so one element from
    each coset of {identity, swap} suffices.
    """
    qs = _branch_samples(samples)
    elements = b3_elements()
    index = {g: k for k, g in enumerate(elements)}
    swap = SignedPermutation((1, 0, 2), (1, 1, 1))
    out = []
    for k, g in enumerate(elements):
        if k > index[g * swap]:
            continue
        out.append((f"right[{k}]", apply_many(g, qs)))
    return out
