import json
from math import comb

import pytest

from glbt import geometry as geo
from glbt.complex import pyramid_lattice
from glbt.gvec import CACHE_ENV, pyramid_identity_check, same_polynomial, simplicial_g, toric_g

from conftest import hull_lattice


def test_simplicial_g_examples(octahedron):
    g = simplicial_g(octahedron.f_vector(), 3)
    assert g.h == (1, 3, 3, 1) and g.g == (1, 2)
    for d in range(2, 6):
        s = simplicial_g([comb(d + 1, i + 1) for i in range(d)], d)
        assert s.h == (1,) * (d + 1)
        assert s.g == (1,) + (0,) * (d // 2)


def test_cyclic_g():
    L = hull_lattice(geo.cyclic(4, 7))
    assert simplicial_g(L.f_vector(), 4).g == (1, 2, 3)
    assert toric_g(L).g == (1, 2, 3)


def test_toric_simplex_and_cube(cube3):
    for d in range(1, 6):
        assert toric_g(hull_lattice(geo.simplex(d))).g == (1,) + (0,) * (d // 2)
    g = toric_g(cube3)
    assert g[1] == cube3.n_vertices - 3 - 1 == 4
    assert g.h == (1, 5, 5, 1)


def test_toric_h_is_palindromic():
    for pc in (geo.cube(4), geo.hypersimplex(2, 5), geo.prism(geo.cross_polytope(3))):
        h = toric_g(hull_lattice(pc)).h
        assert h == h[::-1]


def test_index_past_end_is_zero(octahedron):
    assert toric_g(octahedron)[5] == 0


@pytest.mark.parametrize("pc", [geo.cube(3), geo.cyclic(4, 7), geo.simplex(3)], ids=["cube", "cyclic", "simplex"])
def test_pyramid_identity(pc):
    assert pyramid_identity_check(hull_lattice(pc))


def test_combinatorial_and_geometric_pyramid_agree(cube3):
    a = toric_g(pyramid_lattice(cube3)).g
    b = toric_g(hull_lattice(geo.pyramid(geo.cube(3)))).g
    assert same_polynomial(a, b)


def test_disk_cache(tmp_path, monkeypatch, cube3):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    first = toric_g(cube3)
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    assert json.loads(files[0].read_text())["g"] == list(first.g)
    assert toric_g(cube3) == first
