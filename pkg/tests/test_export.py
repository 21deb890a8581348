"""Tests for figure data export (engines/export.py)."""

import csv
import io
import sys
from pathlib import Path

import numpy as np
import pytest

_project_root = Path(__file__).parent.parent
sys.path.insert(0, str(_project_root))

from engines.errors import DegenerateInput
from engines.export import (
    ExportBundle,
    Marker,
    figure_bundle,
    right_curve_bundle,
    tiling_bundle,
    view_basis,
    write_csv,
    write_svg,
)
from engines.solvers import least_symmetric, least_symmetric_ordered
from engines.sphere_geom import SpherePoint


class TestBundles:
    def test_tiling_has_nine_circles(self):
        bundle = tiling_bundle(12)
        assert len(bundle.polylines) == 9
        assert bundle.polylines[0][0] == "circle[x-y]"
        assert all(pts.shape == (12, 3) for _, pts in bundle.polylines)

    def test_right_curves(self):
        bundle = right_curve_bundle(20)
        labels = [label for label, _ in bundle.polylines]
        assert len(labels) == 24
        assert all(label.startswith("right[") for label in labels)

    def test_all_points_on_sphere(self):
        bundle = tiling_bundle(30).extend(right_curve_bundle(30))
        for _, pts in bundle.polylines:
            assert np.allclose(np.linalg.norm(pts, axis=1), 1.0, atol=1e-12)

    def test_figure_markers(self):
        results = [least_symmetric(), least_symmetric_ordered()]
        bundle = figure_bundle(10, results)
        assert len(bundle.polylines) == 33
        assert [m.label for m in bundle.markers] == ["least_symmetric", "least_symmetric_ordered"]
        assert bundle.markers[0].radius == results[0].inradius

    def test_figure_orbit_markers(self, acute_result):
        bundle = figure_bundle(8, [acute_result], orbits=True)
        assert len(bundle.markers) == 48
        assert bundle.markers[0].label == "least_symmetric_acute"
        assert bundle.markers[0].point == acute_result.point
        assert bundle.markers[47].label == "least_symmetric_acute[47]"
        assert len({tuple(m.point) for m in bundle.markers}) == 48
        assert all(m.radius == acute_result.inradius for m in bundle.markers)

    def test_rejects_single_sample(self):
        with pytest.raises(ValueError):
            tiling_bundle(1)
        with pytest.raises(ValueError):
            right_curve_bundle(1)

    def test_rejects_points_off_sphere(self):
        bundle = ExportBundle()
        with pytest.raises(DegenerateInput):
            bundle.add_polyline("bad", np.array([[1.0, 1.0, 0.0]]))
        with pytest.raises(DegenerateInput):
            bundle.add_polyline("flat", np.array([1.0, 0.0, 0.0]))

    def test_to_dict(self):
        bundle = tiling_bundle(4)
        bundle.markers.append(Marker("p", SpherePoint(0.0, 0.0, 1.0), 0.1))
        d = bundle.to_dict()
        assert len(d["polylines"]) == 9
        assert len(d["polylines"][0]["points"]) == 4
        assert d["markers"] == [{"label": "p", "point": [0.0, 0.0, 1.0], "radius": 0.1}]


class TestCsv:
    def test_header_and_rows(self):
        bundle = tiling_bundle(5)
        bundle.markers.append(Marker("eq", SpherePoint(0.0, 1.0, 0.0)))
        out = io.StringIO()
        write_csv(bundle, out)
        rows = list(csv.reader(io.StringIO(out.getvalue())))
        assert rows[0] == ["label", "x", "y", "z"]
        assert len(rows) == 1 + 9 * 5 + 1
        assert rows[-1] == ["marker[eq]", "0", "1", "0"]
        for row in rows[1:]:
            x, y, z = map(float, row[1:])
            assert abs(x * x + y * y + z * z - 1.0) < 1e-12


class TestSvg:
    def test_view_basis_orthonormal(self):
        for view in [(1, 1, 1), (0, 0, 1), (1, 0, 0)]:
            e1, e2, w = view_basis(view)
            frame = np.vstack([e1, e2, w])
            assert np.allclose(frame @ frame.T, np.eye(3), atol=1e-15)

    def test_document(self):
        results = [least_symmetric()]
        out = io.StringIO()
        write_svg(figure_bundle(40, results), out)
        text = out.getvalue()
        assert text.startswith("<svg")
        assert 'viewBox="-1.05 -1.05 2.1 2.1"' in text
        assert 'data-label="circle[x-y]"' in text
        assert 'data-label="least_symmetric"' in text
        assert text.rstrip().endswith("</svg>")

    def test_back_hemisphere_hidden(self):
        bundle = ExportBundle()
        bundle.markers.append(Marker("front", SpherePoint(0.0, 0.0, 1.0), 0.1))
        bundle.markers.append(Marker("back", SpherePoint(0.0, 0.0, -1.0), 0.1))
        out = io.StringIO()
        write_svg(bundle, out, view=(0.0, 0.0, 1.0))
        assert 'data-label="front"' in out.getvalue()
        assert 'data-label="back"' not in out.getvalue()
