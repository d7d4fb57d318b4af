"""Configuration for pytest."""

import os
import sys

import pytest

# Add src directory to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

# pylint: disable=wrong-import-position
from hypertope_extensions.catalog.families import (  # noqa: E402
    ICOSAHEDRON,
    cube,
    orthoplex,
    polygon,
)
from hypertope_extensions.catalog.realize import realize  # noqa: E402
from hypertope_extensions.diagonals import diagonal_classes  # noqa: E402
from hypertope_extensions.extend import build_extension  # noqa: E402
from hypertope_extensions.halve import realize_halving  # noqa: E402


def _extension(descriptor, s):
    polytope = realize(descriptor)
    return build_extension(polytope, diagonal_classes(polytope), s)


@pytest.fixture(scope="session")
def square():
    """The square ``{4}`` as polygon(2)."""
    return realize(polygon(2))


@pytest.fixture(scope="session")
def icosahedron():
    return realize(ICOSAHEDRON)


@pytest.fixture(scope="session")
def cube3():
    return realize(cube(3))


@pytest.fixture(scope="session")
def square_extension():
    """``2^{{4},G(2)}``, the torus map ``{4,4}_(4,0)``."""
    return _extension(polygon(2), 2)


@pytest.fixture(scope="session")
def square_halving(square_extension):
    return realize_halving(square_extension)


@pytest.fixture(scope="session")
def hexagon_extension():
    return _extension(polygon(3), 2)


@pytest.fixture(scope="session")
def octahedron_extension():
    return _extension(orthoplex(3), 2)


@pytest.fixture(scope="session")
def cube3_extension():
    return _extension(cube(3), 2)


@pytest.fixture(scope="session")
def cube3_halving(cube3_extension):
    return realize_halving(cube3_extension)


@pytest.fixture(scope="session")
def icosahedron_extension():
    return _extension(ICOSAHEDRON, 2)
