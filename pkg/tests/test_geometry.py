import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from glbt import geometry as geo
from glbt.gvec import toric_g


def test_simplex_hull():
    h = geo.convex_hull(geo.simplex(3))
    assert h.lattice.f_vector() == [4, 6, 4]


def test_cube_hull_and_volume():
    h = geo.convex_hull(geo.cube(3))
    assert h.lattice.f_vector() == [8, 12, 6]
    assert geo.hull_volume(h) == 1
    assert len(h.facet_hyperplanes) == 6


def test_interior_point_dropped():
    pts = list(geo.cube(3).points) + [(Fraction(1, 2),) * 3]
    h = geo.convex_hull(geo.PointConfiguration(3, pts))
    assert h.lattice.f_vector() == [8, 12, 6]
    assert "8" not in h.vertex_subset


def test_coplanar_points_on_face_dropped():
    pts = list(geo.cube(3).points) + [(Fraction(1, 2), Fraction(1, 2), 0)]
    h = geo.convex_hull(geo.PointConfiguration(3, pts))
    assert h.lattice.f_vector() == [8, 12, 6]


def test_degenerate_input():
    with pytest.raises(geo.DegenerateError):
        geo.convex_hull(geo.PointConfiguration(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)]))


def test_float_rejected():
    with pytest.raises(geo.GeometryError):
        geo.PointConfiguration(2, [(0.5, 0), (1, 0), (0, 1)])


def test_generators():
    assert geo.convex_hull(geo.stacked(3, 0)).lattice.f_vector() == [4, 6, 4]
    assert geo.convex_hull(geo.pyramid(geo.cube(2))).lattice.f_vector() == [5, 8, 5]
    assert geo.convex_hull(geo.cyclic(4, 7)).lattice.f_vector() == [7, 21, 28, 14]
    assert geo.convex_hull(geo.cross_polytope(4)).lattice.f_vector() == [8, 24, 32, 16]
    assert geo.convex_hull(geo.prism(geo.simplex(2))).lattice.f_vector() == [6, 9, 5]
    assert geo.convex_hull(geo.hypersimplex(2, 5)).lattice.f_vector() == [10, 30, 30, 10]


@pytest.mark.parametrize("d,m", [(3, 3), (4, 2), (5, 2)])
def test_stacked_is_simplicial_with_right_vertex_count(d, m):
    L = geo.convex_hull(geo.stacked(d, m, seed=11)).lattice
    assert L.n_vertices == d + 1 + m
    assert L.is_simplicial()


def test_hull_invariant_under_permutation_and_affine_map():
    pc = geo.cyclic(4, 8)
    base = geo.convex_hull(pc).lattice.f_vector()
    rng = random.Random(4)
    order = list(range(len(pc.points)))
    rng.shuffle(order)
    assert geo.convex_hull(pc.subset(order)).lattice.f_vector() == base
    M = [[2, 1, 0, 0], [0, 1, 0, 3], [0, 0, 1, 0], [1, 0, 0, 1]]
    img = pc.affine_image(M, [Fraction(1, 3)] * 4)
    assert geo.convex_hull(img).lattice.f_vector() == base
    assert toric_g(geo.convex_hull(img).lattice).g == toric_g(geo.convex_hull(pc).lattice).g


def test_verify_triangulation_examples():
    pc = geo.simplex(3)
    assert geo.verify_triangulation(pc, [(0, 1, 2, 3)]).valid
    st_pc, simp = geo.stacked_with_simplices(3, 2, seed=5)
    assert geo.verify_triangulation(st_pc, simp).valid
    rep = geo.verify_triangulation(geo.cube(3), [(0, 1, 2, 4)])
    assert not rep.valid and not rep.volume_ok


def test_verify_triangulation_detects_overlap():
    # two triangulations of the square glued together cover it twice
    sq = geo.cube(2)
    rep = geo.verify_triangulation(sq, [(0, 1, 3), (0, 2, 3), (0, 1, 2)])
    assert not rep.valid


def test_pulling_triangulation_volume():
    h = geo.convex_hull(geo.cross_polytope(3))
    assert geo.hull_volume(h) == Fraction(4, 3)


def test_glbt_simplex_and_cyclic():
    r = geo.glbt_triangulation(geo.simplex(4), 2)
    assert r.simplices == [(0, 1, 2, 3, 4)] and r.verdict and r.g_k == 0
    r = geo.glbt_triangulation(geo.cyclic(4, 7), 2)
    assert r.g_k == 3 and r.consistent


def test_sphere_sample_prefix_stable_and_near_sphere():
    a = geo.sample_sphere_polytope(3, 30, seed=2)
    b = geo.sample_sphere_polytope(3, 60, seed=2)
    assert b.points[:30] == a.points
    for p in b.points:
        assert abs(sum(c * c for c in p) - 1) < Fraction(1, 2**28)


def test_sphere_small_sample_is_tetrahedron():
    h = geo.convex_hull(geo.sample_sphere_polytope(3, 4, seed=9))
    assert h.lattice.f_vector() == [4, 6, 4]


def test_hausdorff_regular_tetrahedron():
    s = 1 / math.sqrt(3)
    raw = [(s, s, s), (s, -s, -s), (-s, s, -s), (-s, -s, s)]
    pts = [tuple(Fraction(round(c * 2**40), 2**40) for c in p) for p in raw]
    eps = geo.hausdorff_eps(geo.PointConfiguration(3, pts))
    assert abs(float(eps) - 2 / 3) < 1e-9


def test_hausdorff_octahedron_is_upper_bound():
    eps = geo.hausdorff_eps(geo.cross_polytope(3))
    exact = 1 - 1 / math.sqrt(3)
    assert exact <= float(eps) < exact + 1e-12


def test_hausdorff_decreases_on_average():
    e_small = geo.hausdorff_eps(geo.sample_sphere_polytope(3, 20, seed=1))
    e_big = geo.hausdorff_eps(geo.sample_sphere_polytope(3, 200, seed=1))
    assert e_big < e_small


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_random_hull_vertices_and_euler(seed):
    rng = random.Random(seed)
    pts = sorted({tuple(rng.randint(-5, 5) for _ in range(3)) for _ in range(10)})
    try:
        h = geo.convex_hull(geo.PointConfiguration(3, pts))
    except geo.DegenerateError:
        return
    f = h.lattice.f_vector()
    assert f[0] - f[1] + f[2] == 2
    # every input point satisfies every facet inequality
    for a, b in h.facet_hyperplanes:
        for p in pts:
            assert sum(x * y for x, y in zip(a, p)) <= b
