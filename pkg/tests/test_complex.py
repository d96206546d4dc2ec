import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from glbt import geometry as geo
from glbt.complex import (
    EMPTY,
    FaceLattice,
    LatticeError,
    PolyComplex,
    UnknownVertexError,
    barycentric_subdivision,
    closed_neighborhood,
    closed_star,
    complement_closure,
    glbt_candidate_simplices,
    induced_subcomplex,
    is_k_simplicial,
    missing_simplices,
    pyramid_lattice,
    skeleton,
    subdivided_subcomplex,
)
from glbt.homology import betti

from conftest import hull_lattice


def test_cube_one_skeleton(cube3):
    sk = skeleton(cube3, 1)
    assert sk.f_vector() == [8, 12]
    assert sk.is_simplicial


def test_skeleton_edge_cases():
    L = hull_lattice(geo.simplex(4))
    assert set(skeleton(L, -1).faces) == {EMPTY}
    assert len(skeleton(L, 4).faces) == 2**5
    with pytest.raises(ValueError):
        skeleton(L, 5)


def test_skeleton_composes(octahedron):
    C = octahedron.boundary()
    for i, j in itertools.product(range(-1, 3), repeat=2):
        assert skeleton(skeleton(C, j), i).faces == skeleton(C, min(i, j)).faces


def test_k_simplicial(cube3, octahedron):
    assert is_k_simplicial(cube3, 1)
    assert not is_k_simplicial(cube3, 2)
    assert is_k_simplicial(octahedron, 2)
    assert is_k_simplicial(hull_lattice(geo.simplex(4)), 3)


def test_induced_antipodal_pair(octahedron):
    pw = induced_subcomplex(octahedron, ["0", "1"])
    assert pw.f_vector() == [2]
    assert set(induced_subcomplex(octahedron, []).faces) == {EMPTY}
    assert induced_subcomplex(octahedron, octahedron.labels).faces == octahedron.boundary().faces


def test_unknown_label(octahedron):
    with pytest.raises(UnknownVertexError):
        induced_subcomplex(octahedron, ["nope"])


def test_complement_closure_examples(octahedron, chain):
    assert complement_closure(octahedron, ["0", "1"]).faces == octahedron.boundary().faces
    assert complement_closure(octahedron, octahedron.labels).faces == octahedron.boundary().faces
    _, _, L = chain
    cl = complement_closure(L, [0, 7])
    stars = closed_neighborhood(L.boundary(), [0]).faces | closed_neighborhood(L.boundary(), [7]).faces
    assert set(cl.faces) == set(stars)
    assert betti(cl)[0] == 1  # two components


def _brute_closure(L, W):
    """Closure of the face-set difference bd P minus P_{V-W}."""
    rest = frozenset(range(L.n_vertices)) - frozenset(W)
    diff = [f for f in L.proper_faces() if f and not f <= rest]
    out = {EMPTY}
    for f in diff:
        out |= {g for g in L.proper_faces() if g <= f}
    return out


CORPUS = [geo.cube(3), geo.cross_polytope(3), geo.cyclic(4, 7), geo.pyramid(geo.cube(3)), geo.prism(geo.simplex(2)), geo.stacked(3, 4, seed=3)]


@pytest.mark.parametrize("pc", CORPUS, ids=lambda pc: f"n{len(pc.points)}d{pc.dim}")
def test_complement_closure_brute_force(pc):
    L = hull_lattice(pc)
    n = L.n_vertices
    assert n <= 12
    subsets = [W for r in range(n + 1) for W in itertools.combinations(range(n), r)]
    if len(subsets) > 600:
        subsets = random.Random(0).sample(subsets, 600)
    for W in subsets:
        assert set(complement_closure(L, W).faces) == _brute_closure(L, W), W


def test_induced_intersection(octahedron):
    rng = random.Random(1)
    for _ in range(30):
        a = [v for v in range(6) if rng.random() < 0.5]
        b = [v for v in range(6) if rng.random() < 0.5]
        both = set(a) & set(b)
        lhs = set(induced_subcomplex(octahedron, a).faces) & set(induced_subcomplex(octahedron, b).faces)
        assert lhs == set(induced_subcomplex(octahedron, both).faces)


def test_missing_simplices(octahedron):
    assert missing_simplices(octahedron, 1) == [(0, 1), (2, 3), (4, 5)]
    bip = hull_lattice(geo.PointConfiguration(3, [(1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1), (0, 0, -1)]))
    assert missing_simplices(bip, 2) == [(0, 1, 2)]
    assert missing_simplices(hull_lattice(geo.simplex(4)), 2) == []


def test_closed_star(octahedron):
    st_ = closed_star(octahedron.boundary(), 4)
    assert st_.f_vector() == [5, 8, 4]
    assert betti(st_) == [0, 0, 0]
    C = octahedron.boundary()
    assert set(closed_neighborhood(C, []).faces) == {EMPTY}
    assert closed_neighborhood(C, range(6)).faces == C.faces


def test_subdivision_counts():
    tri = PolyComplex.simplicial([(0, 1, 2)])
    sd = barycentric_subdivision(tri)
    assert sd.f_vector()[0] == 7 and sd.f_vector()[-1] == 6
    sq = hull_lattice(geo.cube(2))
    sd2 = barycentric_subdivision(PolyComplex(dict(sq.faces), sq.labels))
    assert sd2.f_vector()[0] == 9 and sd2.f_vector()[-1] == 8
    assert sd2.is_simplicial


@pytest.mark.parametrize("pc", [geo.cube(3), geo.pyramid(geo.cube(2)), geo.cross_polytope(3)], ids=["cube", "pyr", "oct"])
def test_subdivision_preserves_betti(pc):
    L = hull_lattice(pc)
    sd = barycentric_subdivision(L.boundary())
    assert betti(sd) == [0, 0, 1]
    assert sd.euler_characteristic() == 2


def test_subdivided_subcomplex(cube3):
    sd = barycentric_subdivision(cube3.boundary())
    sub = induced_subcomplex(cube3, cube3.facets()[0])
    piece = subdivided_subcomplex(sd, sub)
    assert piece.is_subcomplex_of(sd)
    assert betti(piece) == [0, 0, 0]
    assert piece.f_vector()[-1] == 8


def test_boundary_euler_characteristic():
    for pc in CORPUS:
        L = hull_lattice(pc)
        f = L.f_vector()
        assert sum((-1) ** i * x for i, x in enumerate(f)) == 1 + (-1) ** (L.dim - 1)


def test_candidates_simplex_and_stacked():
    L = hull_lattice(geo.simplex(4))
    assert glbt_candidate_simplices(L, 2) == [(0, 1, 2, 3, 4)]
    pc, simp = geo.stacked_with_simplices(4, 3, seed=2)
    h = geo.convex_hull(pc)
    cands = glbt_candidate_simplices(h.lattice, 2)
    mapped = sorted(tuple(sorted(h.vertex_indices[i] for i in c)) for c in cands)
    assert mapped == simp


def test_candidates_octahedron_k1(octahedron):
    # with k=1 only singletons are constrained, so every 4-subset qualifies
    assert len(glbt_candidate_simplices(octahedron, 1)) == 15


def test_candidates_preconditions(cube3):
    with pytest.raises(ValueError):
        glbt_candidate_simplices(cube3, 2)
    with pytest.raises(ValueError):
        glbt_candidate_simplices(hull_lattice(geo.cube(4)), 2)


def test_pyramid_lattice_f_vector(cube3):
    P = pyramid_lattice(cube3)
    f, g = cube3.f_vector(), P.f_vector()
    ext = [1] + f + [1]
    assert g == [ext[i] + ext[i + 1] for i in range(len(ext) - 1)][: len(g)]


def test_lattice_validation_rejects_garbage():
    with pytest.raises(LatticeError):
        FaceLattice.from_facets(2, [(0, 1), (1, 2)])


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_random_polytope_lattice_is_sphere(seed):
    rng = random.Random(seed)
    pts = sorted({tuple(rng.randint(-6, 6) for _ in range(3)) for _ in range(9)})
    try:
        h = geo.convex_hull(geo.PointConfiguration(3, pts))
    except geo.DegenerateError:
        return
    assert betti(barycentric_subdivision(h.lattice.boundary())) == [0, 0, 1]
