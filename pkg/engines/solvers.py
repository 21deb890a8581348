"""Extremal triangles: points of the shape sphere farthest from the symmetric loci.

Straight-walled regions (the chamber of unordered triangles and the
isosceles tile) are solved by their incenter. The obtuse and acute
regions have one curved wall, the right-triangle curve; their farthest
point lies on the bisector arc of the two straight walls where the arc's
distance to the curve first equals its distance to the straight walls.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .certificates import DEFAULT_BRACKET_WIDTH, DEFAULT_SCAN_STEP, PolynomialCertificate, verify_certificate
from .errors import SolverFailure
from .loci import DEFAULT_CURVE_SAMPLES, DEFAULT_MINIMIZE_TOL, curve_wall_distance, distance_to_right
from .numerics import bisect, scan_sign_change
from .sphere_geom import (
    ArcParametrization,
    GreatCircle,
    SpherePoint,
    arc_point,
    geodesic_distance,
    incenter_of_circular_triangle,
    normalize,
)
from .triangle_space import TriangleSides, apply, b3_elements, classify, orbit, sides_from_point

__all__ = [
    "SolverResult",
    "OBTUSE_ARC",
    "ACUTE_ARC",
    "least_symmetric",
    "least_symmetric_ordered",
    "least_symmetric_obtuse",
    "least_symmetric_acute",
    "most_acute_and_most_obtuse",
    "verify_certificate",
    "PolynomialCertificate",
]

log = logging.getLogger(__name__)

DEFAULT_SCAN_STEPS = 1024
DEFAULT_ROOT_TOL = 1e-13

# Closed forms are reproduced by the numeric solutions to about this
_CLOSED_FORM_TOL = 1e-9

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT6 = math.sqrt(6.0)

# Bisector of x = y and z = 0, starting on the degenerate isosceles point
OBTUSE_ARC = ArcParametrization(
    SpherePoint(1 / _SQRT2, 1 / _SQRT2, 0.0),
    SpherePoint(0.5, -0.5, 1 / _SQRT2),
)

# Bisector of x = y and y = z, starting on the equilateral point
ACUTE_ARC = ArcParametrization(
    SpherePoint(1 / _SQRT3, 1 / _SQRT3, 1 / _SQRT3),
    SpherePoint(1 / _SQRT2, 0.0, -1 / _SQRT2),
)

EQUILATERAL = SpherePoint(1 / _SQRT3, 1 / _SQRT3, 1 / _SQRT3)


@dataclass(frozen=True)
class SolverResult:
    """An extremal point and what it stands for.

    `t0` and `alpha` (= tan(t0/2)) are set for the curved-wall problems,
    where `certificate` holds the polynomial root bracket for alpha.
    """

    label: str
    point: SpherePoint
    sides: TriangleSides
    inradius: float
    t0: Optional[float] = None
    alpha: Optional[float] = None
    certificate: Optional[PolynomialCertificate] = None

    def to_dict(self) -> dict:
        out = {
            "label": self.label,
            "point": list(self.point),
            "sides": list(self.sides),
            "inradius": self.inradius,
            "flags": classify(self.sides).labels(),
        }
        if self.t0 is not None:
            out["t0"] = self.t0
            out["alpha"] = self.alpha
        if self.certificate is not None:
            out["certificate"] = {
                "kind": self.certificate.kind,
                "degree": self.certificate.degree,
                "bracket": list(self.certificate.bracket),
            }
        return out


def _result(label: str, point: SpherePoint, inradius: float, **kw) -> SolverResult:
    return SolverResult(label, point, sides_from_point(point), inradius, **kw)


def _check_close(what: str, got, expected, tol: float) -> None:
    err = float(np.max(np.abs(np.asarray(list(got)) - np.asarray(list(expected)))))
    if err > tol:
        log.warning("%s deviates from its closed form by %.3g", what, err)
    else:
        log.debug("%s matches its closed form to %.3g", what, err)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def least_symmetric_closed_form() -> Tuple[SpherePoint, TriangleSides, float]:
    """(point, sides, inradius) of the incenter of the unordered chamber, exactly."""
    r2 = _SQRT2
    point = normalize((1 + 2 * r2, 1 + r2, 1.0))
    sides = TriangleSides((28 + 2 * r2) / 97, (82 - 8 * r2) / 97, (84 + 6 * r2) / 97)
    inradius = math.asin(math.sqrt((13 - 6 * r2) / 97))
    return point, sides, inradius


def obtuse_sides_from_alpha(alpha: float) -> TriangleSides:
    a, r2 = alpha, _SQRT2
    k = 1.0 / (2.0 * (1 + a * a) ** 2)
    return TriangleSides(
        k * (1 - 2 * r2 * a + 4 * a**2 + 2 * r2 * a**3 + a**4),
        k * (1 + 2 * r2 * a + 4 * a**2 - 2 * r2 * a**3 + a**4),
        k * (2 + 2 * a**4),
    )


def acute_sides_from_alpha(alpha: float) -> TriangleSides:
    a, r6 = alpha, _SQRT6
    k = 2.0 / (3.0 * (1 + a * a) ** 2)
    return TriangleSides(
        k * (1 - r6 * a + a**2 + r6 * a**3 + a**4),
        k * (1 + 4 * a**2 + a**4),
        k * (1 + r6 * a + a**2 - r6 * a**3 + a**4),
    )


def obtuse_inradius_from_alpha(alpha: float) -> float:
    return math.asin(_SQRT2 * alpha / (1 + alpha * alpha))


def acute_inradius_from_alpha(alpha: float) -> float:
    return math.asin(alpha / (1 + alpha * alpha))


# ---------------------------------------------------------------------------
# Straight-walled regions
# ---------------------------------------------------------------------------

def least_symmetric() -> SolverResult:
    """Incenter of the chamber 0 <= z <= y <= x: the least symmetric triangle."""
    center, inradius = incenter_of_circular_triangle(
        GreatCircle.from_plane(1, -1, 0),
        GreatCircle.from_plane(0, 1, -1),
        GreatCircle.from_plane(0, 0, 1),
    )
    point, sides, closed_r = least_symmetric_closed_form()
    _check_close("least symmetric incenter", center, point, 1e-14)
    _check_close("least symmetric inradius", [inradius], [closed_r], 1e-12)
    return _result("least_symmetric", center, inradius)


def least_symmetric_ordered() -> SolverResult:
    """Incenter of the tile |z| <= y <= x: the degenerate 1:4:5 triangle."""
    center, inradius = incenter_of_circular_triangle(
        GreatCircle.from_plane(1, -1, 0),
        GreatCircle.from_plane(0, 1, -1),
        GreatCircle.from_plane(0, 1, 1),
    )
    _check_close("ordered incenter", center, (2 / math.sqrt(5), 1 / math.sqrt(5), 0.0), 1e-14)
    return _result("least_symmetric_ordered", center, inradius)


def isosceles_tile_incenters() -> List[SpherePoint]:
    """The 24 points farthest from the isosceles circles, one per tile."""
    return orbit(least_symmetric_ordered().point, unique=True)


# ---------------------------------------------------------------------------
# Curved-wall regions
# ---------------------------------------------------------------------------

def _solve_curved(
    label: str,
    arc: ArcParametrization,
    wall_scale: float,
    scan_steps: int,
    root_tol: float,
    curve_samples: int,
    minimize_tol: float,
) -> Tuple[float, float]:
    """Smallest t in (0, pi/2) with curve distance = arcsin(wall_scale * sin t); returns (t0, wall)."""

    def wall(t: float) -> float:
        return math.asin(wall_scale * math.sin(t))

    def gap(t: float) -> float:
        return curve_wall_distance(t, arc, curve_samples, minimize_tol) - wall(t)

    bracket = scan_sign_change(gap, 0.0, 0.5 * math.pi, scan_steps, include_start=False)
    if bracket is None:
        raise SolverFailure(f"{label}: no sign change of the wall gap on (0, pi/2)")
    x1, x2, f1, f2 = bracket
    log.debug("%s: root bracketed in [%r, %r]", label, x1, x2)
    res = bisect(gap, x1, x2, tol=root_tol, f1=f1, f2=f2)
    log.debug("%s: t0=%r after %d bisection steps", label, res.root, res.iterations)
    return res.root, wall(res.root)


def least_symmetric_obtuse(
    scan_steps: int = DEFAULT_SCAN_STEPS,
    root_tol: float = DEFAULT_ROOT_TOL,
    curve_samples: int = DEFAULT_CURVE_SAMPLES,
    minimize_tol: float = DEFAULT_MINIMIZE_TOL,
    certify: bool = True,
    bracket_width: float = DEFAULT_BRACKET_WIDTH,
    scan_step: float = DEFAULT_SCAN_STEP,
) -> SolverResult:
    """Farthest obtuse triangle from the isosceles, degenerate and right loci."""
    t0, inradius = _solve_curved(
        "obtuse", OBTUSE_ARC, 1 / _SQRT2, scan_steps, root_tol, curve_samples, minimize_tol
    )
    alpha = math.tan(0.5 * t0)
    point = arc_point(OBTUSE_ARC, t0)
    _check_close("obtuse sides", sides_from_point(point), obtuse_sides_from_alpha(alpha), _CLOSED_FORM_TOL)
    certificate = verify_certificate("obtuse", alpha, bracket_width, scan_step) if certify else None
    return _result("least_symmetric_obtuse", point, inradius, t0=t0, alpha=alpha, certificate=certificate)


def least_symmetric_acute(
    scan_steps: int = DEFAULT_SCAN_STEPS,
    root_tol: float = DEFAULT_ROOT_TOL,
    curve_samples: int = DEFAULT_CURVE_SAMPLES,
    minimize_tol: float = DEFAULT_MINIMIZE_TOL,
    certify: bool = True,
    bracket_width: float = DEFAULT_BRACKET_WIDTH,
    scan_step: float = DEFAULT_SCAN_STEP,
) -> SolverResult:
    """Farthest acute triangle from the isosceles and right loci."""
    t0, inradius = _solve_curved(
        "acute", ACUTE_ARC, 0.5, scan_steps, root_tol, curve_samples, minimize_tol
    )
    alpha = math.tan(0.5 * t0)
    point = arc_point(ACUTE_ARC, t0)
    _check_close("acute sides", sides_from_point(point), acute_sides_from_alpha(alpha), _CLOSED_FORM_TOL)
    certificate = verify_certificate("acute", alpha, bracket_width, scan_step) if certify else None
    return _result("least_symmetric_acute", point, inradius, t0=t0, alpha=alpha, certificate=certificate)


def most_acute_and_most_obtuse(
    curve_samples: int = DEFAULT_CURVE_SAMPLES,
    minimize_tol: float = DEFAULT_MINIMIZE_TOL,
) -> Tuple[SolverResult, SolverResult]:
    """Equilateral and (1/2, 1/2, 1) triangles with their distance to the right locus."""
    flat = SpherePoint(1 / _SQRT2, 1 / _SQRT2, 0.0)
    return (
        _result("most_acute", EQUILATERAL, distance_to_right(EQUILATERAL, curve_samples, minimize_tol)),
        _result("most_obtuse", flat, distance_to_right(flat, curve_samples, minimize_tol)),
    )


# ---------------------------------------------------------------------------
# Orbits and the ring around the equilateral point
# ---------------------------------------------------------------------------

def solution_orbit(result: SolverResult) -> List[Tuple[SpherePoint, float]]:
    """The 48 images of an extremal point, each with its incircle radius."""
    return [(apply(g, result.point), result.inradius) for g in b3_elements()]


def equilateral_clearance(acute: SolverResult) -> float:
    """Radius of the largest circle about the equilateral point missing the six acute incircles."""
    return geodesic_distance(EQUILATERAL, acute.point) - acute.inradius


def ring_gap(acute: SolverResult) -> float:
    """equilateral_clearance minus the acute inradius."""
    return equilateral_clearance(acute) - acute.inradius
