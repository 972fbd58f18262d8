import sys
import os
import json

import pytest

# Ensure project root is on path
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, PROJECT_ROOT)

FIXTURE_PATH = os.path.join(PROJECT_ROOT, "data", "example_points.json")


def _as_point(coords):
    return tuple(complex(re, im) for re, im in coords)


@pytest.fixture(scope="session")
def example_points():
    """Analytic singular points per example, as tuples of complex coordinates."""
    with open(FIXTURE_PATH) as fh:
        raw = json.load(fh)
    return {
        name: {**entry, "points": [_as_point(p) for p in entry["points"]]}
        for name, entry in raw.items()
    }
