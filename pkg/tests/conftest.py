import os
from fractions import Fraction
from pathlib import Path

import pytest

from frieze import WeakFrieze
from gallery import dissection_frieze
from geometry import Diagonal, validate_dissection

FIXTURES = Path(__file__).resolve().parent / "fixtures"

# Rows 1..8 of the pattern of the octagon glued from three constant-1 squares.
OCTAGON_ARRAY = "\n".join([
    "0 1 1 1 1 2 2 1 0",
    "  0 1 1 2 4 4 2 1 0",
    "    0 1 2 4 4 2 1 1 0",
    "      0 1 2 2 1 1 1 1 0",
    "        0 1 1 1 1 2 2 1 0",
    "          0 1 1 2 4 4 2 1 0",
    "            0 1 2 4 4 2 1 1 0",
    "              0 1 2 2 1 1 1 1 0",
])


def dissection(n, *pairs):
    return validate_dissection(n, [Diagonal(a, b) for a, b in pairs])


def frieze_from(n, D, value):
    """Rational weak frieze from a function of the diagonal."""
    return WeakFrieze.from_function(n, D, lambda d: Fraction(value(d)))


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Run every test with default settings."""
    for key in list(os.environ):
        if key.startswith("FRIEZE_"):
            monkeypatch.delenv(key)


@pytest.fixture
def octagon_spec_path():
    return FIXTURES / "octagon.json"


@pytest.fixture
def octagon_dissection():
    return dissection(8, (1, 4), (5, 8))


@pytest.fixture
def octagon(octagon_dissection):
    return dissection_frieze(8, octagon_dissection)


@pytest.fixture
def square():
    """Two constant-1 triangles glued along {1,3}: f(2,4) = 2, everything else 1."""
    return frieze_from(4, dissection(4, (1, 3)), lambda d: 2 if d == Diagonal(2, 4) else 1)
