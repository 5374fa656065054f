import io

import pytest

from KFacetLab.geometry import PointSet


def pts(*rows):
    return PointSet.from_rows(rows)


def moment_points(ts, d):
    return PointSet.from_rows([[t ** j for j in range(1, d + 1)] for t in ts])


@pytest.fixture
def triangle_center():
    return pts((0, 0), (4, 0), (0, 4), (1, 1))


@pytest.fixture
def unit_square():
    return pts((0, 0), (1, 0), (0, 1), (1, 1))


@pytest.fixture
def pentagon():
    return pts((0, 0), (2, 0), (3, 2), (1, 4), (-1, 2))


@pytest.fixture
def tetrahedron():
    return pts((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))


@pytest.fixture
def log_file():
    return io.StringIO()
