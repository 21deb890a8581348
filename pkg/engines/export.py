"""Exportable figure data: symmetry circles, right curves and extremal points.

A bundle is written as CSV (label,x,y,z), JSON, or an SVG orthographic
projection onto the plane perpendicular to a view axis.
"""

import csv
import math
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, TextIO, Tuple

import numpy as np

from .errors import DegenerateInput
from .loci import right_curve_orbit, symmetry_loci
from .solvers import solution_orbit
from .sphere_geom import SpherePoint, circle_points, normalize

EXPORT_FORMATS = ("csv", "json", "svg")

_UNIT_TOL = 1e-9

_SVG_COLORS = {"circle": "#4a6fa5", "right": "#c0392b", "marker": "#2d8a4e"}


@dataclass(frozen=True)
class Marker:
    label: str
    point: SpherePoint
    radius: float = 0.0


@dataclass
class ExportBundle:
    """Labeled polylines (n, 3) and markers, all on the unit sphere."""

    polylines: List[Tuple[str, np.ndarray]] = field(default_factory=list)
    markers: List[Marker] = field(default_factory=list)

    def __post_init__(self):
        for label, pts in self.polylines:
            _check_unit(label, pts)

    def add_polyline(self, label: str, points: np.ndarray) -> None:
        pts = np.asarray(points, dtype=np.float64)
        _check_unit(label, pts)
        self.polylines.append((label, pts))

    def extend(self, other: "ExportBundle") -> "ExportBundle":
        self.polylines.extend(other.polylines)
        self.markers.extend(other.markers)
        return self

    def to_dict(self) -> Dict[str, list]:
        return {
            "polylines": [
                {"label": label, "points": pts.tolist()} for label, pts in self.polylines
            ],
            "markers": [
                {"label": m.label, "point": list(m.point), "radius": m.radius} for m in self.markers
            ],
        }


def _check_unit(label: str, pts: np.ndarray) -> None:
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise DegenerateInput(f"Polyline {label!r} must have shape (n, 3), got {pts.shape}")
    err = np.abs(np.einsum("ij,ij->i", pts, pts) - 1.0)
    if err.size and float(err.max()) > _UNIT_TOL:
        raise DegenerateInput(f"Polyline {label!r} leaves the unit sphere by {float(err.max()):.3g}")


# ---------------------------------------------------------------------------
# Bundles
# ---------------------------------------------------------------------------

def tiling_bundle(samples: int) -> ExportBundle:
    """The six isosceles and three degenerate great circles."""
    if samples < 2:
        raise ValueError(f"Need at least 2 samples per polyline, got {samples}")
    bundle = ExportBundle()
    for label, circle in symmetry_loci().labeled():
        bundle.add_polyline(f"circle[{label}]", circle_points(circle, samples))
    return bundle


def right_curve_bundle(samples: int) -> ExportBundle:
    """The 24 images of the right-triangle branch."""
    if samples < 2:
        raise ValueError(f"Need at least 2 samples per polyline, got {samples}")
    return ExportBundle(polylines=right_curve_orbit(samples))


def figure_bundle(samples: int, results: Sequence, orbits: bool = False) -> ExportBundle:
    """Tiling, right curves, and a marker with its incircle for each solver result.

    With orbits, each result also gets its 47 other B3 images, labelled
    <label>[k] in b3_elements order.
    """
    bundle = tiling_bundle(samples).extend(right_curve_bundle(samples))
    for r in results:
        if not orbits:
            bundle.markers.append(Marker(r.label, r.point, r.inradius))
            continue
        for k, (point, radius) in enumerate(solution_orbit(r)):
            bundle.markers.append(Marker(r.label if k == 0 else f"{r.label}[{k}]", point, radius))
    return bundle


# ---------------------------------------------------------------------------
# Writers
# ---------------------------------------------------------------------------

def _fmt(v: float) -> str:
    return f"{v:.15g}"


def write_csv(bundle: ExportBundle, out: TextIO) -> None:
    """Rows label,x,y,z; markers use the label marker[<name>]."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["label", "x", "y", "z"])
    for label, pts in bundle.polylines:
        for p in pts:
            writer.writerow([label, _fmt(p[0]), _fmt(p[1]), _fmt(p[2])])
    for m in bundle.markers:
        writer.writerow([f"marker[{m.label}]", _fmt(m.point.x), _fmt(m.point.y), _fmt(m.point.z)])


def view_basis(view: Sequence[float]) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(right, up, toward-viewer) orthonormal frame for a view axis."""
    w = normalize(view).as_array()
    helper = np.array([0.0, 0.0, 1.0]) if abs(w[2]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(helper, w)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(w, e1)
    return e1, e2, w


def _visible_runs(pts: np.ndarray, w: np.ndarray) -> List[np.ndarray]:
    """Split a polyline into runs on the hemisphere facing the viewer."""
    front = pts @ w >= 0.0
    runs, start = [], None
    for i, f in enumerate(front):
        if f and start is None:
            start = i
        elif not f and start is not None:
            runs.append(pts[start:i])
            start = None
    if start is not None:
        runs.append(pts[start:])
    return [r for r in runs if len(r) >= 2]


def write_svg(bundle: ExportBundle, out: TextIO, view: Sequence[float] = (1.0, 1.0, 1.0)) -> None:
    """Orthographic projection in the viewbox [-1, 1]^2; the back hemisphere is hidden."""
    e1, e2, w = view_basis(view)

    def project(p) -> Tuple[float, float]:
        return float(np.dot(p, e1)), -float(np.dot(p, e2))

    out.write('<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.05 -1.05 2.1 2.1">\n')
    out.write('<circle cx="0" cy="0" r="1" fill="none" stroke="#999" stroke-width="0.004"/>\n')
    for label, pts in bundle.polylines:
        color = _SVG_COLORS["right" if label.startswith("right") else "circle"]
        for run in _visible_runs(pts, w):
            coords = " ".join(f"{x:.5f},{y:.5f}" for x, y in (project(p) for p in run))
            out.write(
                f'<polyline data-label="{label}" points="{coords}" fill="none" '
                f'stroke="{color}" stroke-width="0.006"/>\n'
            )
    for m in bundle.markers:
        p = m.point.as_array()
        if p @ w < 0.0:
            continue
        x, y = project(p)
        out.write(
            f'<circle data-label="{m.label}" cx="{x:.5f}" cy="{y:.5f}" r="{math.sin(m.radius):.5f}" '
            f'fill="none" stroke="{_SVG_COLORS["marker"]}" stroke-width="0.004"/>\n'
        )
        out.write(f'<circle cx="{x:.5f}" cy="{y:.5f}" r="0.008" fill="{_SVG_COLORS["marker"]}"/>\n')
    out.write("</svg>\n")
