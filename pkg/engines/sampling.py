"""Monte Carlo estimates under the symmetric measure on triangles.

Points are drawn uniformly on the sphere (normalized standard normal
triples) and classified in fixed-size blocks. Block k is seeded from
(seed, k), and blocks are merged in index order, so a report depends on
(n, seed, block_size) only and never on how many workers ran the blocks.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from .loci import distance_to_symmetric_many
from .triangle_space import DEFAULT_CLASSIFY_TOL, FLAGS, classify_many, sides_from_points

log = logging.getLogger(__name__)

DEFAULT_BLOCK_SIZE = 65536


@dataclass(frozen=True)
class SampleReport:
    """Empirical flag frequencies and mean distance to the symmetric loci."""

    n: int
    seed: int
    fractions: Dict[str, float]
    mean_symmetry_distance: float
    counts: Dict[str, int] = field(default_factory=dict)

    def standard_error(self, flag: str) -> float:
        p = self.fractions[flag]
        return math.sqrt(p * (1.0 - p) / self.n)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "seed": self.seed,
            "fractions": dict(self.fractions),
            "counts": dict(self.counts),
            "mean_symmetry_distance": self.mean_symmetry_distance,
        }


def sphere_points(n: int, rng: np.random.Generator) -> np.ndarray:
    """n points (n, 3) uniform on the unit sphere."""
    g = rng.standard_normal((n, 3))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def _block_sizes(n: int, block_size: int) -> List[int]:
    full, rest = divmod(n, block_size)
    return [block_size] * full + ([rest] if rest else [])


def _run_block(seed: int, index: int, size: int, tol: float) -> Tuple[Dict[str, int], float]:
    rng = np.random.default_rng(np.random.SeedSequence([seed, index]))
    points = sphere_points(size, rng)
    masks = classify_many(sides_from_points(points), tol)
    counts = {flag: int(masks[flag].sum()) for flag in FLAGS}
    dist_sum = math.fsum(distance_to_symmetric_many(points).tolist())
    log.debug("sample block %d: %d points", index, size)
    return counts, dist_sum


def sample_report(
    n: int,
    seed: int = 0,
    workers: int = 1,
    block_size: int = DEFAULT_BLOCK_SIZE,
    tol: float = DEFAULT_CLASSIFY_TOL,
) -> SampleReport:
    """Sample n triangles from the symmetric measure and summarize them."""
    if n < 1:
        raise ValueError(f"Sample size must be >= 1, got {n}")
    if block_size < 1:
        raise ValueError(f"Block size must be >= 1, got {block_size}")
    sizes = _block_sizes(n, block_size)

    def run(k: int):
        return _run_block(seed, k, sizes[k], tol)

    if workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(run, range(len(sizes))))
    else:
        blocks = [run(k) for k in range(len(sizes))]

    counts = {flag: sum(b[0][flag] for b in blocks) for flag in FLAGS}
    mean = math.fsum(b[1] for b in blocks) / n
    fractions = {flag: counts[flag] / n for flag in FLAGS}
    return SampleReport(n, seed, fractions, mean, counts)


def obtuse_fraction_quadrature(rows: int = 1024) -> float:
    """Share of the sphere covered by obtuse triangles, by midpoint quadrature.

    Obtuseness depends on squared coordinates only, so one octant suffices.
    (z, phi) -> (sqrt(1 - z^2) cos phi, sqrt(1 - z^2) sin phi, z) preserves
    area, so a uniform midpoint grid in (z, phi) has equal-area cells.
    """
    if rows < 1:
        raise ValueError(f"Quadrature needs at least one row, got {rows}")
    cols = rows
    phi = (np.arange(cols) + 0.5) * (0.5 * math.pi / cols)
    cos_phi, sin_phi = np.cos(phi), np.sin(phi)
    obtuse = 0
    for i in range(rows):
        z = (i + 0.5) / rows
        rho = math.sqrt(1.0 - z * z)
        points = np.column_stack([rho * cos_phi, rho * sin_phi, np.full(cols, z)])
        s = np.sort(sides_from_points(points), axis=1)
        obtuse += int(np.count_nonzero(s[:, 2] ** 2 > s[:, 0] ** 2 + s[:, 1] ** 2))
    return obtuse / (rows * cols)
