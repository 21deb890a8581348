"""Core TriShape class — Python SDK for trishape."""

import io
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

_ROOT = Path(__file__).parent.parent.parent  # sdk/trishape -> project root
if str(_ROOT) not in sys.path:
    sys.path.insert(0, str(_ROOT))

from engines import export as _export  # noqa: E402
from engines import sampling, solvers  # noqa: E402
from engines.config import DEFAULT_CONFIG_TEXT, STORE_NAME, Settings, config_path, load_settings  # noqa: E402
from engines.sampling import SampleReport  # noqa: E402
from engines.solvers import SolverResult  # noqa: E402
from engines.sphere_geom import SpherePoint, normalize  # noqa: E402
from engines.triangle_space import (  # noqa: E402
    ShapeClass,
    angles,
    classify,
    normalize_perimeter,
    orbit,
    point_from_sides,
    s_coords,
    sides_from_point,
)

CONSTRAINTS = ("none", "ordered", "obtuse", "acute", "extremes")
EXPORTS = ("tiling", "right-curve", "figure")


class TriShape:
    """Main trishape interface for Python."""

    def __init__(self, path: str = "."):
        self._root = Path(path).resolve()
        self._store = self._root / STORE_NAME

    @property
    def store_dir(self) -> Path:
        return self._store

    def _config_path(self) -> Path:
        return config_path(self._root)

    def _init_store(self):
        """Write the default config unless one exists."""
        self._store.mkdir(parents=True, exist_ok=True)
        config = self._config_path()
        if not config.exists():
            config.write_text(DEFAULT_CONFIG_TEXT)

    @property
    def settings(self) -> Settings:
        return load_settings(self._root)

    # -- coordinates --------------------------------------------------------

    def convert(
        self,
        sides: Optional[Sequence[float]] = None,
        point: Optional[Sequence[float]] = None,
        tol: Optional[float] = None,
    ) -> dict:
        """Both coordinate systems for a triangle given by sides or by a point, with its flags.

        Sides are scaled to perimeter 2; a point is scaled to unit length.
        """
        if (sides is None) == (point is None):
            raise ValueError("Give exactly one of sides or point")
        if sides is not None:
            tri = normalize_perimeter(*sides)
            p = point_from_sides(tri)
        else:
            p = normalize(point)
            tri = sides_from_point(p)
        s = s_coords(tri)
        return {
            "sides": list(tri),
            "s_coords": list(s.as_tuple()),
            "point": list(p),
            "angles": list(angles(tri)),
            "flags": classify(tri, self.settings.classify_tol if tol is None else tol).labels(),
        }

    def classify(self, sides: Sequence[float], tol: Optional[float] = None) -> ShapeClass:
        tri = normalize_perimeter(*sides)
        s_coords(tri)
        return classify(tri, self.settings.classify_tol if tol is None else tol)

    def orbit(self, point: Sequence[float], unique: bool = False) -> List[SpherePoint]:
        return orbit(normalize(point), unique=unique)

    # -- solvers ------------------------------------------------------------

    def solve(self, constraint: str = "none") -> List[SolverResult]:
        """Extremal triangles for a constraint; 'extremes' gives two results."""
        cfg = self.settings
        curved = dict(
            scan_steps=cfg.scan_steps,
            root_tol=cfg.root_tol,
            curve_samples=cfg.curve_samples,
            minimize_tol=cfg.minimize_tol,
            bracket_width=cfg.bracket_width,
            scan_step=cfg.certificate_scan_step,
        )
        if constraint == "none":
            return [solvers.least_symmetric()]
        if constraint == "ordered":
            return [solvers.least_symmetric_ordered()]
        if constraint == "obtuse":
            return [solvers.least_symmetric_obtuse(**curved)]
        if constraint == "acute":
            return [solvers.least_symmetric_acute(**curved)]
        if constraint == "extremes":
            return list(solvers.most_acute_and_most_obtuse(cfg.curve_samples, cfg.minimize_tol))
        raise ValueError(f"Unknown constraint: {constraint!r} (expected one of {CONSTRAINTS})")

    # -- export -------------------------------------------------------------

    def bundle(self, what: str, samples: Optional[int] = None) -> _export.ExportBundle:
        n = self.settings.export_samples if samples is None else samples
        if what == "tiling":
            return _export.tiling_bundle(n)
        if what == "right-curve":
            return _export.right_curve_bundle(n)
        if what == "figure":
            results = self.solve("ordered") + self.solve("none") + self.solve("obtuse") + self.solve("acute")
            return _export.figure_bundle(n, results, orbits=True)
        raise ValueError(f"Unknown export: {what!r} (expected one of {EXPORTS})")

    def export(
        self,
        what: str,
        samples: Optional[int] = None,
        fmt: Optional[str] = None,
        out: Optional[TextIO] = None,
    ) -> str:
        """Write an export bundle as csv, json or svg; returns the text written."""
        cfg = self.settings
        fmt = cfg.export_format if fmt is None else fmt
        if fmt not in _export.EXPORT_FORMATS:
            raise ValueError(f"Unknown format: {fmt!r} (expected one of {_export.EXPORT_FORMATS})")
        bundle = self.bundle(what, samples)
        buf = io.StringIO()
        if fmt == "csv":
            _export.write_csv(bundle, buf)
        elif fmt == "svg":
            _export.write_svg(bundle, buf, cfg.export_view)
        else:
            doc = {
                "command": "export",
                "inputs": {"what": what, "samples": samples or cfg.export_samples},
                "results": bundle.to_dict(),
            }
            buf.write(json.dumps(doc) + "\n")
        text = buf.getvalue()
        if out is not None:
            out.write(text)
        return text

    # -- sampling -----------------------------------------------------------

    def sample(
        self,
        n: Optional[int] = None,
        seed: Optional[int] = None,
        workers: Optional[int] = None,
        tol: Optional[float] = None,
    ) -> SampleReport:
        cfg = self.settings
        return sampling.sample_report(
            cfg.sample_n if n is None else n,
            seed=cfg.sample_seed if seed is None else seed,
            workers=cfg.sample_workers if workers is None else workers,
            block_size=cfg.sample_block_size,
            tol=cfg.classify_tol if tol is None else tol,
        )
