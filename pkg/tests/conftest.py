import pytest

from glbt import geometry as geo


def hull_lattice(pc):
    return geo.convex_hull(pc).lattice


@pytest.fixture(scope="session")
def octahedron():
    return hull_lattice(geo.cross_polytope(3))


@pytest.fixture(scope="session")
def cube3():
    return hull_lattice(geo.cube(3))


@pytest.fixture(scope="session")
def chain():
    """Five tetrahedra glued in a path; 8 vertices, apexes 0 and 7 at the ends."""
    pc, simplices = geo.stacked_with_simplices(3, 4, chain=True)
    return pc, simplices, hull_lattice(pc)
