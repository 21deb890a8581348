"""Exception hierarchy for trishape engines."""


class ShapeSpaceError(Exception):
    """Base class for every error raised by the shape-space engines."""


class DegenerateInput(ShapeSpaceError, ValueError):
    """Input has no direction or scale (zero vector, zero perimeter, negative side)."""


class CoincidentCircles(ShapeSpaceError, ValueError):
    """Two great circles share their plane, so bisector/intersection is undefined."""


class NoTriangle(ShapeSpaceError, ValueError):
    """Three great circles do not bound a proper spherical triangle."""


class NotATriangle(ShapeSpaceError, ValueError):
    """Side lengths violate the perimeter normalization or a triangle inequality."""


class OutOfDomain(ShapeSpaceError, ValueError):
    """Parameter outside the domain of a parametrization."""


class SolverFailure(ShapeSpaceError, RuntimeError):
    """A root could not be bracketed."""


class CertificateFailure(ShapeSpaceError, RuntimeError):
    """A polynomial certificate could not be established."""
