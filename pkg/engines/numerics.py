"""One-dimensional numerics: bracketed minimization, root bracketing, bisection.

All routines are deterministic and operate on plain Python floats, with an
optional numpy-vectorized callable for the coarse scans.
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np


INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

# Dekker splitter for IEEE doubles: 2^27 + 1
_SPLITTER = 134217729.0


@dataclass(frozen=True)
class RootResult:
    """Result of a bracketed root search.

    Attributes:
        root: Midpoint of the final bracket.
        bracket: (lo, hi) with f(lo) and f(hi) of opposite sign (or one zero).
        iterations: Number of bisection steps.
        function_calls: Number of function evaluations.
    """

    root: float
    bracket: Tuple[float, float]
    iterations: int
    function_calls: int


def golden_section(
    f: Callable[[float], float], a: float, b: float, tol: float = 1e-13
) -> Tuple[float, float]:
    """Golden-section search for the minimum of a unimodal f on [a, b].

    Returns (x, f(x)) where x is the best point seen; the final interval
    has width <= tol.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, f(x)

    # Required steps to achieve tolerance
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc < yd:
        return c, yc
    return d, yd


def minimize_bracketed(
    f: Callable[[float], float],
    f_vec: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    samples: int = 256,
    tol: float = 1e-13,
    margin: float = 0.0,
    max_refine: int = 8,
) -> Tuple[float, float]:
    """Minimize f on [a, b]: uniform scan to bracket, golden-section to refine.

    Every local minimum of the scan within `margin` of the best sample is
    refined (at most `max_refine` of them, lowest first). f_vec must agree
    with f elementwise. The result is never worse than the best sample.
    """
    xs = np.linspace(a, b, samples)
    ys = np.asarray(f_vec(xs), dtype=np.float64)
    best = int(np.argmin(ys))

    left = np.concatenate(([np.inf], ys[:-1]))
    right = np.concatenate((ys[1:], [np.inf]))
    local = np.nonzero((ys <= left) & (ys <= right) & (ys <= ys[best] + margin))[0]
    local = local[np.argsort(ys[local], kind="stable")][:max_refine]

    x_best, f_best = float(xs[best]), float(ys[best])
    for i in local:
        lo = xs[max(i - 1, 0)]
        hi = xs[min(i + 1, samples - 1)]
        x, fx = golden_section(f, float(lo), float(hi), tol)
        if fx < f_best:
            x_best, f_best = x, fx
    return x_best, f_best


def scan_sign_change(
    f: Callable[[float], float],
    a: float,
    b: float,
    steps: int,
    include_start: bool = True,
) -> Optional[Tuple[float, float, float, float]]:
    """Walk [a, b] in equal steps and return the first bracket (x1, x2, f1, f2).

    Returns None when f keeps its sign over the whole interval. When
    include_start is False the walk starts one step in, so a root at a
    itself is skipped.
    """
    if steps < 1:
        raise ValueError(f"Scan needs at least one step, got {steps}")
    dx = (b - a) / steps
    x1 = a if include_start else a + dx
    f1 = f(x1)
    k = 0 if include_start else 1
    while k < steps:
        k += 1
        x2 = a + k * dx
        f2 = f(x2)
        if f1 == 0.0 or f1 * f2 < 0.0 or f2 == 0.0:
            return x1, x2, f1, f2
        x1, f1 = x2, f2
    return None


def bisect(
    f: Callable[[float], float],
    x1: float,
    x2: float,
    tol: float = 1e-13,
    f1: Optional[float] = None,
    f2: Optional[float] = None,
) -> RootResult:
    """Bisection on a sign-change bracket until its width is at most tol."""
    calls = 0
    if f1 is None:
        f1 = f(x1)
        calls += 1
    if f2 is None:
        f2 = f(x2)
        calls += 1
    if f1 == 0.0:
        return RootResult(x1, (x1, x1), 0, calls)
    if f2 == 0.0:
        return RootResult(x2, (x2, x2), 0, calls)
    if f1 * f2 > 0.0:
        raise ValueError(f"Root is not bracketed: f({x1})={f1}, f({x2})={f2}")

    iterations = 0
    while abs(x2 - x1) > tol:
        x3 = 0.5 * (x1 + x2)
        if x3 == x1 or x3 == x2:
            break
        f3 = f(x3)
        calls += 1
        iterations += 1
        if f3 == 0.0:
            return RootResult(x3, (x3, x3), iterations, calls)
        if (f1 < 0.0) == (f3 < 0.0):
            x1, f1 = x3, f3
        else:
            x2, f2 = x3, f3

    lo, hi = min(x1, x2), max(x1, x2)
    return RootResult(0.5 * (lo + hi), (lo, hi), iterations, calls)


# ---------------------------------------------------------------------------
# Error-free transformations and compensated Horner evaluation
# ---------------------------------------------------------------------------

def two_sum(a: float, b: float) -> Tuple[float, float]:
    """Knuth's TwoSum: a + b = s + e exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def _split(a: float) -> Tuple[float, float]:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> Tuple[float, float]:
    """Dekker's TwoProduct: a * b = p + e exactly (barring overflow)."""
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    e = al * bl - (((p - ah * bh) - al * bh) - ah * bl)
    return p, e


def compensated_horner(coefficients: Sequence[float], x: float) -> float:
    """Evaluate sum(coefficients[k] * x**k) with compensated Horner.

    Coefficients are in ascending order of degree. The result is as
    accurate as plain Horner carried out in twice the working precision.
    """
    if not coefficients:
        return 0.0
    s = float(coefficients[-1])
    c = 0.0
    for a in reversed(coefficients[:-1]):
        p, pi = two_prod(s, x)
        s, sigma = two_sum(p, float(a))
        c = c * x + (pi + sigma)
    return s + c
