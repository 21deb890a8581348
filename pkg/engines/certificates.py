"""Polynomial root certificates for the obtuse and acute solutions.

tan(t0/2) for each curved-wall problem is the smallest positive root of an
even, palindromic integer polynomial. Certification brackets a sign change
of width below 1e-12 around the numeric candidate, and checks by a sign
scan that no smaller positive root exists.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import CertificateFailure
from .numerics import bisect, compensated_horner

log = logging.getLogger(__name__)

DEFAULT_BRACKET_WIDTH = 1e-12
DEFAULT_SCAN_STEP = 1e-4

# Widest half-window searched around a candidate; the certified root
# must lie inside it
_SEARCH_WINDOW = 1e-6

# Coefficients of z^deg, z^(deg-2), ..., z^0 as displayed (odd degrees vanish)
OBTUSE_EVEN_COEFFICIENTS = [
    16, -992, 9689, -36232, 100908, -197080, 238166,
    -197080, 100908, -36232, 9689, -992, 16,
]

ACUTE_EVEN_COEFFICIENTS = [
    131072, -30081024, 715784192, -10181738496, 83609604096,
    -443259328512, 1410471953408, -1858643071488, 18137673285920,
    -14367112128688, 56162265469488, -73041229883512, 73382345772378,
    -122601623733111, 73382345772378, -73041229883512, 56162265469488,
    -14367112128688, 18137673285920, -1858643071488, 1410471953408,
    -443259328512, 83609604096, -10181738496, 715784192, -30081024, 131072,
]


def _full_coefficients(even_descending: List[int]) -> List[int]:
    """Ascending coefficients of z^0..z^deg with zeros at odd degrees."""
    even = even_descending[::-1]
    coeffs = []
    for k, c in enumerate(even):
        coeffs.append(c)
        if k < len(even) - 1:
            coeffs.append(0)
    return coeffs


POLYNOMIALS: Dict[str, List[int]] = {
    "obtuse": _full_coefficients(OBTUSE_EVEN_COEFFICIENTS),
    "acute": _full_coefficients(ACUTE_EVEN_COEFFICIENTS),
}


@dataclass(frozen=True)
class PolynomialCertificate:
    """A certified root of one of the two palindromic polynomials.

    `coefficients` are ascending (z^0 first); `bracket` has a sign change
    of the polynomial across it.
    """

    kind: str
    coefficients: Tuple[int, ...]
    root: float
    bracket: Tuple[float, float]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def width(self) -> float:
        return self.bracket[1] - self.bracket[0]


def is_palindromic(coefficients) -> bool:
    return list(coefficients) == list(coefficients)[::-1]


def is_even(coefficients) -> bool:
    return all(c == 0 for c in list(coefficients)[1::2])


def evaluate(coefficients, z: float) -> float:
    """Evaluate an even polynomial at z via compensated Horner in w = z^2."""
    even = [float(c) for c in list(coefficients)[0::2]]
    return compensated_horner(even, z * z)


def verify_certificate(
    kind: str,
    root: float,
    bracket_width: float = DEFAULT_BRACKET_WIDTH,
    scan_step: float = DEFAULT_SCAN_STEP,
) -> PolynomialCertificate:
    """Certify that `root` is (near) the smallest positive root of the `kind` polynomial."""
    if kind not in POLYNOMIALS:
        raise ValueError(f"Unknown certificate kind: {kind!r} (expected one of {sorted(POLYNOMIALS)})")
    if not (scan_step > 0.0 and bracket_width > 0.0):
        raise ValueError(f"scan_step and bracket_width must be positive, got {scan_step}, {bracket_width}")
    coeffs = POLYNOMIALS[kind]
    if not (is_palindromic(coeffs) and is_even(coeffs)):
        raise CertificateFailure(f"{kind} polynomial is not even and palindromic")
    if not root > 0.0:
        raise CertificateFailure(f"Candidate root must be positive, got {root!r}")

    def p(z: float) -> float:
        return evaluate(coeffs, z)

    # Widen a window around the candidate until the sign flips
    lo = hi = None
    half = 1e-10
    while half <= _SEARCH_WINDOW:
        a, b = root - half, root + half
        fa, fb = p(a), p(b)
        if fa == 0.0 or fb == 0.0 or (fa < 0.0) != (fb < 0.0):
            lo, hi = a, b
            break
        half *= 10.0
    if lo is None:
        raise CertificateFailure(
            f"No sign change of the {kind} polynomial within {_SEARCH_WINDOW} of {root!r} (P={p(root)!r})"
        )

    result = bisect(p, lo, hi, tol=0.5 * bracket_width)
    lo, hi = result.bracket
    if hi - lo >= bracket_width:
        raise CertificateFailure(f"Bracket did not shrink below {bracket_width}: ({lo}, {hi})")
    if abs(result.root - root) > _SEARCH_WINDOW:
        raise CertificateFailure(
            f"Candidate {root!r} is {abs(result.root - root):.3g} from the certified root {result.root!r}"
        )
    log.debug("%s certificate: root in [%r, %r]", kind, lo, hi)

    # No earlier sign change on (0, lo)
    z = 0.0
    prev = p(z)
    while z + scan_step < lo:
        z += scan_step
        cur = p(z)
        if cur == 0.0 or (cur < 0.0) != (prev < 0.0):
            raise CertificateFailure(
                f"{kind} polynomial changes sign near {z!r}, below the candidate {root!r}"
            )
        prev = cur
    if (p(lo) < 0.0) != (prev < 0.0) and p(lo) != 0.0:
        raise CertificateFailure(f"{kind} polynomial changes sign between {z!r} and {lo!r}")

    return PolynomialCertificate(kind, tuple(coeffs), result.root, (lo, hi))
