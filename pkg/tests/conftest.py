"""Shared fixtures: named polytopes and the seeded random corpus."""
import pytest

from latticegfun import build_polytope, cross_polytope, random_corpus

# corpus parameters shared by the property and acceptance suites
CORPUS_2D = dict(seed=11, count=15, dim=2, max_coord=3)
CORPUS_3D = dict(seed=7, count=10, dim=3, max_coord=2)


@pytest.fixture(scope="session")
def pyramid():
    return build_polytope([(0, 0, 0), (1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)])


@pytest.fixture(scope="session")
def right_triangle():
    return build_polytope([(0, 0), (2, 0), (0, 1)])


@pytest.fixture(scope="session")
def unit_square():
    return build_polytope([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture(scope="session")
def unit_cube():
    return build_polytope([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)])


@pytest.fixture(scope="session")
def simplex2():
    return build_polytope([(0, 0), (1, 0), (0, 1)])


@pytest.fixture(scope="session")
def simplex3():
    return build_polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


@pytest.fixture(scope="session")
def segment():
    return build_polytope([(0,), (1,)])


@pytest.fixture(scope="session")
def octahedron():
    return cross_polytope(3)


@pytest.fixture(scope="session")
def corpus2d():
    return random_corpus(**CORPUS_2D)


@pytest.fixture(scope="session")
def corpus3d():
    return random_corpus(**CORPUS_3D)
