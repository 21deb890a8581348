"""trishape — the spherical model of triangle shape space."""

from .core import TriShape

__version__ = "1.0.0"


def init(path: str = ".") -> "TriShape":
    """Create <path>/.trishape/config with defaults and return a TriShape."""
    shape = TriShape(path)
    shape._init_store()
    return shape


def open(path: str = ".") -> "TriShape":
    """Open a working directory; a missing config means defaults."""
    return TriShape(path)
