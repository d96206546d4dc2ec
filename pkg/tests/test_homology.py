import pytest

from glbt import geometry as geo
from glbt.complex import PolyComplex, barycentric_subdivision, closed_star, skeleton
from glbt.homology import (
    ChainComplexQ,
    NotSimplicialError,
    NotSubcomplexError,
    alpha,
    betti,
    check_qglbt,
    check_zero_map,
    euler_characteristic_check,
    induced_image_rank,
    is_cohen_macaulay,
    sample_vertex_sets,
)

from conftest import hull_lattice


def test_betti_examples(octahedron):
    tet = hull_lattice(geo.simplex(3)).boundary()
    assert betti(tet) == [0, 0, 1]
    assert betti(PolyComplex.simplicial([(0,), (1,)])) == [1]
    disc = octahedron.boundary().restrict(f for f in octahedron.boundary().faces if f != octahedron.facets()[0])
    assert betti(disc) == [0, 0, 0]


def test_boundary_squared_is_zero(cube3):
    sd = barycentric_subdivision(cube3.boundary())
    assert ChainComplexQ.of(sd).check_dd_zero()
    assert euler_characteristic_check(sd)


def test_non_simplicial_rejected(cube3):
    with pytest.raises(NotSimplicialError):
        betti(cube3.boundary())


def _annulus():
    # inner triangle 0,1,2 and outer triangle 3,4,5
    tris = [(0, 1, 3), (1, 3, 4), (1, 2, 4), (2, 4, 5), (0, 2, 5), (0, 3, 5)]
    return PolyComplex.simplicial(tris)


def test_image_rank_examples(octahedron):
    ann = _annulus()
    inner = ann.restrict(f for f in ann.faces if f <= {0, 1, 2} and len(f) <= 2)
    assert induced_image_rank(inner, ann, 1).image_rank == 1
    sphere = octahedron.boundary()
    equator = sphere.restrict(f for f in sphere.faces if f <= {0, 1, 2, 3})
    assert induced_image_rank(equator, sphere, 1).image_rank == 0
    assert induced_image_rank(sphere, sphere, 2).image_rank == 1
    with pytest.raises(NotSubcomplexError):
        induced_image_rank(sphere, equator, 1)


def test_image_rank_composition_bound(octahedron):
    sphere = octahedron.boundary()
    equator = sphere.restrict(f for f in sphere.faces if f <= {0, 1, 2, 3})
    north = closed_star(sphere, 4)
    mid = sphere.restrict(set(equator.faces) | set(north.faces))
    ac = induced_image_rank(equator, sphere, 1).image_rank
    ab = induced_image_rank(equator, mid, 1).image_rank
    bc = induced_image_rank(mid, sphere, 1).image_rank
    assert ac <= min(ab, bc)


def test_alpha_examples(octahedron, chain):
    assert alpha(octahedron, ["0", "1"], 1).image_rank == 0
    _, _, L = chain
    assert alpha(L, [0, 7], 1).image_rank == 1
    for k in (1,):
        assert alpha(octahedron, range(6), k).image_rank == 0


def test_alpha_on_non_simplicial(cube3):
    # opposite corners of the cube: two components inside a connected target
    assert alpha(cube3, [0, 7], 1).image_rank == 0


def test_alpha_k_range(octahedron):
    with pytest.raises(ValueError):
        alpha(octahedron, [0], 2)


def test_qglbt_tight_chain(chain):
    _, _, L = chain
    r = check_qglbt(L, [0, 7], 1)
    assert (r.lhs, r.rhs, r.holds) == (4, 4, True)


def test_qglbt_octahedron_and_simplex(octahedron):
    for W in sample_vertex_sets(6, 3, 5):
        r = check_qglbt(octahedron, W, 1)
        assert r.lhs == 0 and r.rhs == 2 and r.holds
    s = hull_lattice(geo.simplex(3))
    assert check_qglbt(s, [0, 2], 1).lhs == 0


def test_zero_map(octahedron):
    r = check_zero_map(octahedron, 1)
    assert not r.applicable and "g_1 = 2" in r.note
    assert check_zero_map(hull_lattice(geo.simplex(4)), 2).holds
    pyr = hull_lattice(geo.pyramid(geo.cross_polytope(3)))
    rep = check_zero_map(pyr, 2, seed=5)
    assert rep.applicable and rep.holds and len(rep.trials) == 52


def test_cohen_macaulay(chain):
    assert is_cohen_macaulay(hull_lattice(geo.simplex(3)).boundary())
    bowtie = PolyComplex.simplicial([(0, 1, 2), (0, 3, 4)])
    assert not is_cohen_macaulay(bowtie)
    pc, simp, _ = chain
    assert is_cohen_macaulay(PolyComplex.simplicial(simp[:3]))


def test_sampled_sets_are_seeded():
    assert sample_vertex_sets(10, 4, 3) == sample_vertex_sets(10, 4, 3)
    assert len(sample_vertex_sets(10, 4, 3)) == 12
