"""
Pytest configuration and shared fixtures.
"""

import io
import pytest
import sys
from pathlib import Path

# Add scripts to path BEFORE any other imports
project_root = Path(__file__).parent.parent
scripts_path = str(project_root / 'scripts')

# Insert scripts path at the very beginning
sys.path.insert(0, scripts_path)

import os
os.chdir(scripts_path)


@pytest.fixture
def symbolic_ring():
    """The fraction field Q(a, q)."""
    from scalars import CoefficientRing
    return CoefficientRing.symbolic()


@pytest.fixture
def prime_point():
    """A fixed prime-field point away from every small root of unity."""
    from scalars import Specialization
    return Specialization.prime(5, 7, 1000003)


@pytest.fixture
def degenerate_point():
    """(a, q) = (1, 1), where P_n(p, q) becomes the party monoid algebra."""
    from scalars import Specialization
    return Specialization.rational(1, 1)


@pytest.fixture
def engine3(symbolic_ring):
    """Symbolic engine for n = 3."""
    from hecke import get_engine
    return get_engine(3, symbolic_ring)


@pytest.fixture
def run_cli():
    """Run the command line and return (exit code, captured output)."""
    from lab import run

    def invoke(*argv):
        stream = io.StringIO()
        code = run(list(argv), stream=stream)
        return code, stream.getvalue()

    return invoke


@pytest.fixture(autouse=True)
def reset_metrics():
    """Reset the metrics collector between tests."""
    from observability import metrics
    yield
    metrics.reset()
