import functools
import subprocess
import sys

import pytest

from coronageo.corpus import census_graphs


@functools.lru_cache(maxsize=None)
def _census(order: int):
    return tuple(census_graphs(order))


@pytest.fixture(scope="session")
def census():
    """census(order) -> tuple of all connected graphs of that order."""
    return _census


@pytest.fixture(scope="session")
def run_cli():
    """Invoke the CLI in a subprocess and capture the result."""

    def run(*argv: str, timeout: int = 600) -> subprocess.CompletedProcess:
        return subprocess.run(
            [sys.executable, "-m", "coronageo", *argv],
            capture_output=True,
            text=True,
            timeout=timeout,
        )

    return run
