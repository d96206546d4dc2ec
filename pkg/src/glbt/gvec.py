"""f-vectors, simplicial h/g-vectors and the toric g-polynomial.

The toric h- and g-polynomials are defined by Stanley's recursion over the
face lattice::

    g(empty, t) = 1
    h(F, t) = sum over proper faces G < F of g(G, t) * (t - 1) ** (dim F - 1 - dim G)
    g(F, t) = h_0 + (h_1 - h_0) t + ... truncated at degree floor(dim F / 2)
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from math import comb
from pathlib import Path

from .complex import EMPTY, Face, FaceLattice, pyramid_lattice

CACHE_ENV = "GLBT_CACHE_DIR"


@dataclass(frozen=True)
class GVector:
    g: tuple[int, ...]
    h: tuple[int, ...]
    kind: str  # "simplicial" | "toric"

    def __getitem__(self, i: int) -> int:
        return self.g[i] if i < len(self.g) else 0

    def as_csv(self) -> str:
        return ",".join(str(x) for x in self.g)


def f_vector(L: FaceLattice) -> list[int]:
    return L.f_vector()


def _g_from_h(h: list[int]) -> list[int]:
    d = len(h) - 1
    return [h[0]] + [h[i] - h[i - 1] for i in range(1, d // 2 + 1)]


def simplicial_g(f: list[int], d: int) -> GVector:
    """h_i = sum_{j<=i} (-1)^(i-j) C(d-j, i-j) f_{j-1}, with f_{-1} = 1."""
    ff = [1] + list(f)
    h = [sum((-1) ** (i - j) * comb(d - j, i - j) * ff[j] for j in range(i + 1)) for i in range(d + 1)]
    return GVector(tuple(_g_from_h(h)), tuple(h), "simplicial")


def _pascal_minus_one(m: int) -> list[int]:
    """Coefficients of (t - 1)^m, lowest degree first."""
    return [comb(m, i) * (-1) ** (m - i) for i in range(m + 1)]


class ToricEngine:
    """Memoized evaluation of the toric recursion on one lattice.

    Every simplex of a given dimension shares one entry, since all
    ``j``-simplices have isomorphic face lattices.
    """

    def __init__(self, L: FaceLattice):
        self.L = L
        self._g: dict[Face, list[int]] = {EMPTY: [1]}
        self._h: dict[Face, list[int]] = {EMPTY: [1]}
        self._simplex: dict[int, tuple[list[int], list[int]]] = {}
        faces = L.faces
        by_vertex: dict[int, list[Face]] = {}
        for f in faces:
            for v in f:
                by_vertex.setdefault(v, []).append(f)
        self._by_vertex = by_vertex

    def _subfaces(self, f: Face) -> list[Face]:
        seen = {EMPTY}
        out = [EMPTY]
        for v in f:
            for g in self._by_vertex[v]:
                if g not in seen and g < f:
                    seen.add(g)
                    out.append(g)
        return out

    def _compute(self, f: Face) -> tuple[list[int], list[int]]:
        faces = self.L.faces
        dim = faces[f]
        h = [0] * (dim + 1)
        for g in self._subfaces(f):
            gg = self.g(g)
            m = dim - 1 - faces[g]
            p = _pascal_minus_one(m)
            for i, a in enumerate(gg):
                if a:
                    for j, b in enumerate(p):
                        h[i + j] += a * b
        return _g_from_h(h), h

    def g(self, f: Face) -> list[int]:
        r = self._g.get(f)
        if r is not None:
            return r
        dim = self.L.faces[f]
        if len(f) == dim + 1:
            s = self._simplex.get(dim)
            if s is None:
                s = self._compute(f)
                self._simplex[dim] = s
            g, h = s
        else:
            g, h = self._compute(f)
        self._g[f] = g
        self._h[f] = h
        return g

    def h(self, f: Face) -> list[int]:
        self.g(f)
        return self._h[f]

    def evaluate(self) -> GVector:
        # bottom-up keeps recursion depth at one level
        for f in sorted(self.L.faces, key=len):
            self.g(f)
        top = self.L.top
        return GVector(tuple(self._g[top]), tuple(self._h[top]), "toric")


def _cache_path(L: FaceLattice) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    digest = hashlib.sha256(L.fingerprint().encode()).hexdigest()
    return Path(root) / f"toric-{digest}.json"


def toric_g(L: FaceLattice, use_cache: bool = True) -> GVector:
    """Toric g- and h-vector of the polytope with face lattice ``L``.

    When ``GLBT_CACHE_DIR`` is set, results are memoized on disk keyed by a
    hash of the labelled lattice.
    """
    path = _cache_path(L) if use_cache else None
    if path is not None and path.exists():
        data = json.loads(path.read_text())
        return GVector(tuple(data["g"]), tuple(data["h"]), "toric")
    result = ToricEngine(L).evaluate()
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"g": list(result.g), "h": list(result.h)}))
    return result


def toric_h(L: FaceLattice) -> tuple[int, ...]:
    return toric_g(L).h


def pyramid_identity_check(L: FaceLattice) -> bool:
    """Whether the toric g-polynomial is unchanged by taking a pyramid."""
    return same_polynomial(toric_g(L, use_cache=False).g, toric_g(pyramid_lattice(L), use_cache=False).g)


def same_polynomial(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Coefficient lists equal up to trailing zeros."""
    n = max(len(a), len(b))
    return list(a) + [0] * (n - len(a)) == list(b) + [0] * (n - len(b))
