"""Triangle coordinates, classification, and the hyperoctahedral group B3.

A triangle with perimeter 2 and sides (a, b, c) has tangent-circle
coordinates s_a = 1 - a, s_b = 1 - b, s_c = 1 - c and sphere coordinates
(sqrt(s_a), sqrt(s_b), sqrt(s_c)). B3 (signed permutations of x, y, z)
permutes the sides, so the chamber 0 <= z <= y <= x parametrizes
unordered triangles.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Tuple

import numpy as np

from .errors import DegenerateInput, NotATriangle
from .sphere_geom import SpherePoint, normalize

# Perimeter and triangle-inequality tolerance for the coordinate maps
SIDES_TOL = 1e-12

DEFAULT_CLASSIFY_TOL = 1e-9

FLAGS = (
    "equilateral",
    "isosceles",
    "scalene",
    "degenerate",
    "doubly_degenerate",
    "right",
    "acute",
    "obtuse",
)


@dataclass(frozen=True)
class TriangleSides:
    """Side lengths (a, b, c); normalized triangles have a + b + c = 2."""

    a: float
    b: float
    c: float

    @property
    def perimeter(self) -> float:
        return self.a + self.b + self.c

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def __iter__(self) -> Iterator[float]:
        return iter(self.as_tuple())


@dataclass(frozen=True)
class SCoords:
    """Tangent-circle radii (s_a, s_b, s_c), summing to 1."""

    s_a: float
    s_b: float
    s_c: float

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.s_a, self.s_b, self.s_c)


@dataclass(frozen=True)
class ShapeClass:
    """Set of applicable shape flags (see FLAGS)."""

    flags: FrozenSet[str]

    def __contains__(self, flag: str) -> bool:
        return flag in self.flags

    def labels(self) -> List[str]:
        """Flags in canonical order."""
        return [f for f in FLAGS if f in self.flags]

    def __str__(self) -> str:
        return " ".join(self.labels())


@dataclass(frozen=True)
class SignedPermutation:
    """Element of B3: apply(g, p)[i] = signs[i] * p[perm[i]]."""

    perm: Tuple[int, int, int]
    signs: Tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"Not a permutation of (0, 1, 2): {self.perm}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"Signs must be +1 or -1: {self.signs}")

    @classmethod
    def identity(cls) -> "SignedPermutation":
        return cls((0, 1, 2), (1, 1, 1))

    def matrix(self) -> np.ndarray:
        m = np.zeros((3, 3), dtype=np.int64)
        for i in range(3):
            m[i, self.perm[i]] = self.signs[i]
        return m

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """self after other: (self * other)(p) = self(other(p))."""
        perm = tuple(other.perm[self.perm[i]] for i in range(3))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]] for i in range(3))
        return SignedPermutation(perm, signs)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return self.compose(other)

    def inverse(self) -> "SignedPermutation":
        inv = [0, 0, 0]
        for i, j in enumerate(self.perm):
            inv[j] = i
        signs = tuple(self.signs[inv[j]] for j in range(3))
        return SignedPermutation(tuple(inv), signs)

    def order(self) -> int:
        g = self
        k = 1
        ident = SignedPermutation.identity()
        while g != ident:
            g = g * self
            k += 1
        return k


# ---------------------------------------------------------------------------
# Coordinate maps
# ---------------------------------------------------------------------------

def normalize_perimeter(a: float, b: float, c: float) -> TriangleSides:
    """Scale sides so the perimeter is 2."""
    sides = (float(a), float(b), float(c))
    if not all(math.isfinite(s) for s in sides) or min(sides) < 0.0:
        raise DegenerateInput(f"Side lengths must be finite and nonnegative, got {sides}")
    total = sum(sides)
    if total <= 0.0:
        raise DegenerateInput("Zero perimeter")
    k = 2.0 / total
    return TriangleSides(sides[0] * k, sides[1] * k, sides[2] * k)


def check_triangle(sides: TriangleSides, tol: float = SIDES_TOL) -> None:
    """Raise NotATriangle unless sides have perimeter 2 and satisfy the triangle inequalities."""
    a, b, c = sides.as_tuple()
    if not all(math.isfinite(s) for s in (a, b, c)):
        raise NotATriangle(f"Non-finite side lengths {sides.as_tuple()}")
    if abs(a + b + c - 2.0) > tol:
        raise NotATriangle(f"Perimeter must be 2, got {a + b + c!r}; normalize first")
    if min(a, b, c) < -tol:
        raise NotATriangle(f"Negative side length in {sides.as_tuple()}")
    if a > b + c + tol or b > c + a + tol or c > a + b + tol:
        raise NotATriangle(f"Triangle inequality violated by {sides.as_tuple()}")


def s_coords(sides: TriangleSides) -> SCoords:
    check_triangle(sides)
    return SCoords(1.0 - sides.a, 1.0 - sides.b, 1.0 - sides.c)


def sides_from_s_coords(s: SCoords) -> TriangleSides:
    return TriangleSides(1.0 - s.s_a, 1.0 - s.s_b, 1.0 - s.s_c)


def point_from_sides(sides: TriangleSides) -> SpherePoint:
    """Representative in the closed positive octant: (sqrt(s_a), sqrt(s_b), sqrt(s_c))."""
    s = s_coords(sides)
    return normalize([math.sqrt(max(v, 0.0)) for v in s.as_tuple()])


def sides_from_point(p: SpherePoint) -> TriangleSides:
    return TriangleSides(1.0 - p.x * p.x, 1.0 - p.y * p.y, 1.0 - p.z * p.z)


def sides_from_points(points: np.ndarray) -> np.ndarray:
    """Vectorized sides_from_point: (n, 3) points -> (n, 3) sides."""
    return 1.0 - np.square(points)


def side_ratio(sides: TriangleSides) -> Tuple[float, float, float]:
    """Sides scaled so the shortest is 1."""
    m = min(sides.as_tuple())
    if m <= 0.0:
        raise DegenerateInput(f"No ratio for a triangle with a zero side: {sides.as_tuple()}")
    return (sides.a / m, sides.b / m, sides.c / m)


def angles(sides: TriangleSides) -> Tuple[float, float, float]:
    """Interior angles (radians) opposite a, b, c.

    Uses the half-angle form tan(A/2) = sqrt((s-b)(s-c) / (s(s-a))), which
    stays exact at the degenerate angles 0 and pi. A doubly-degenerate
    triangle (one zero side) gets its limiting angles (0, pi/2, pi/2).
    """
    s = sides.as_tuple()
    if min(s) <= 0.0:
        return tuple(0.0 if side <= 0.0 else math.pi / 2 for side in s)
    half = 0.5 * sum(s)
    gaps = [max(half - side, 0.0) for side in s]
    out = []
    for i in range(3):
        num = math.sqrt(gaps[(i + 1) % 3] * gaps[(i + 2) % 3])
        out.append(2.0 * math.atan2(num, math.sqrt(half * gaps[i])))
    return (out[0], out[1], out[2])


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

def classify(sides: TriangleSides, tol: float = DEFAULT_CLASSIFY_TOL) -> ShapeClass:
    """All shape flags that apply to the triangle, within tol."""
    a, b, c = sorted(sides.as_tuple())
    flags = set()

    close_pairs = sum(1 for u, v in ((a, b), (b, c), (a, c)) if abs(u - v) < tol)
    if close_pairs == 3:
        flags.add("equilateral")
    if close_pairs:
        flags.add("isosceles")
    else:
        flags.add("scalene")

    near_one = sum(1 for s in (a, b, c) if abs(s - 1.0) < tol)
    if near_one:
        flags.add("degenerate")
    if near_one >= 2:
        flags.add("doubly_degenerate")

    if not near_one:
        excess = c * c - (a * a + b * b)
        if abs(excess) < tol:
            flags.add("right")
        elif excess < 0.0:
            flags.add("acute")
        else:
            flags.add("obtuse")

    return ShapeClass(frozenset(flags))


def classify_many(sides: np.ndarray, tol: float = DEFAULT_CLASSIFY_TOL) -> Dict[str, np.ndarray]:
    """Vectorized classify: (n, 3) sides -> {flag: boolean mask}."""
    s = np.sort(np.asarray(sides, dtype=np.float64), axis=1)
    a, b, c = s[:, 0], s[:, 1], s[:, 2]

    ab = np.abs(a - b) < tol
    bc = np.abs(b - c) < tol
    ac = np.abs(a - c) < tol
    close_pairs = ab.astype(int) + bc.astype(int) + ac.astype(int)

    near_one = (np.abs(s - 1.0) < tol).sum(axis=1)
    nondegenerate = near_one == 0
    excess = c * c - (a * a + b * b)
    right = nondegenerate & (np.abs(excess) < tol)

    return {
        "equilateral": close_pairs == 3,
        "isosceles": close_pairs > 0,
        "scalene": close_pairs == 0,
        "degenerate": near_one >= 1,
        "doubly_degenerate": near_one >= 2,
        "right": right,
        "acute": nondegenerate & ~right & (excess < 0.0),
        "obtuse": nondegenerate & ~right & (excess > 0.0),
    }


# ---------------------------------------------------------------------------
# Hyperoctahedral group B3
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def _b3() -> Tuple[SignedPermutation, ...]:
    return tuple(
        SignedPermutation(perm, signs)
        for perm in itertools.permutations(range(3))
        for signs in itertools.product((1, -1), repeat=3)
    )


def b3_elements() -> List[SignedPermutation]:
    """The 48 signed permutations of three coordinates, identity first."""
    return list(_b3())


def apply(g: SignedPermutation, p: SpherePoint) -> SpherePoint:
    v = (p.x, p.y, p.z)
    return SpherePoint(
        g.signs[0] * v[g.perm[0]],
        g.signs[1] * v[g.perm[1]],
        g.signs[2] * v[g.perm[2]],
    )


def apply_many(g: SignedPermutation, points: np.ndarray) -> np.ndarray:
    """Vectorized apply on (n, 3) points."""
    return points[..., list(g.perm)] * np.asarray(g.signs, dtype=np.float64)


def orbit(p: SpherePoint, unique: bool = False) -> List[SpherePoint]:
    """Images of p under all 48 elements (optionally without repeats)."""
    images = [apply(g, p) for g in _b3()]
    if not unique:
        return images
    seen = set()
    out = []
    for q in images:
        key = (round(q.x, 12) + 0.0, round(q.y, 12) + 0.0, round(q.z, 12) + 0.0)
        if key not in seen:
            seen.add(key)
            out.append(q)
    return out


def sign_orbit(p: SpherePoint) -> List[SpherePoint]:
    """The eight points (+-x, +-y, +-z), all representing the same ordered triangle."""
    return [
        SpherePoint(sx * p.x, sy * p.y, sz * p.z)
        for sx, sy, sz in itertools.product((1, -1), repeat=3)
    ]


def canonicalize(p: SpherePoint) -> Tuple[SpherePoint, SignedPermutation]:
    """Orbit representative with 0 <= z <= y <= x, and g with apply(g, p) = it."""
    v = (p.x, p.y, p.z)
    order = tuple(sorted(range(3), key=lambda i: (-abs(v[i]), i)))
    signs = tuple(1 if v[i] >= 0.0 else -1 for i in order)
    g = SignedPermutation(order, signs)
    return apply(g, p), g


def in_fundamental_domain(p: SpherePoint, tol: float = SIDES_TOL) -> bool:
    """0 <= z <= y <= x within tol (the chamber of unordered triangles)."""
    return -tol <= p.z and p.z <= p.y + tol and p.y <= p.x + tol


def in_ordered_domain(p: SpherePoint, tol: float = SIDES_TOL) -> bool:
    """|z| <= y <= x within tol (the isosceles-tiling tile of ordered triangles)."""
    return abs(p.z) <= p.y + tol and p.y <= p.x + tol
