"""Shared fixtures for trishape tests."""

import sys
from pathlib import Path

import pytest

# Add project root and sdk to path
_project_root = Path(__file__).parent.parent
sys.path.insert(0, str(_project_root))
sys.path.insert(0, str(_project_root / "sdk"))


@pytest.fixture(scope="session")
def obtuse_result():
    """The least symmetric obtuse triangle, solved once per session."""
    from engines.solvers import least_symmetric_obtuse
    return least_symmetric_obtuse()


@pytest.fixture(scope="session")
def acute_result():
    """The least symmetric acute triangle, solved once per session."""
    from engines.solvers import least_symmetric_acute
    return least_symmetric_acute()


@pytest.fixture
def tmp_store(tmp_path):
    """A working directory with a default .trishape/config."""
    store = tmp_path / ".trishape"
    store.mkdir()
    (store / "config").write_text(
        "[classify]\n"
        "tol = 1e-9\n\n"
        "[export]\n"
        "samples = 24\n"
        "format = csv\n"
        "view = 1,1,1\n\n"
        "[sample]\n"
        "n = 5000\n"
        "seed = 7\n"
        "workers = 1\n"
        "block_size = 1024\n"
    )
    return tmp_path


@pytest.fixture
def shape(tmp_store):
    """A TriShape instance on a temp store."""
    import trishape
    return trishape.open(str(tmp_store))
