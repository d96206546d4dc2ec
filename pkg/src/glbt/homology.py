"""Rational simplicial homology, inclusion-induced maps and the alpha invariant.

Homology of a map ``A -> B`` in degree q is computed from ranks only: the
image of ``H_q(A)`` has dimension ``dim Z_q(A) - dim(B_q(B) & C_q(A))`` and
the intersection is the kernel of the projection of ``B_q(B)`` onto the
q-simplices of B that are not in A.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .complex import (
    EMPTY,
    Face,
    FaceLattice,
    PolyComplex,
    barycentric_subdivision,
    complement_closure,
    face_key,
    induced_subcomplex,
    missing_simplices,
    subdivided_subcomplex,
)
from .gvec import toric_g
from .linalg import rank


class NotSimplicialError(ValueError):
    pass


class NotSubcomplexError(ValueError):
    pass


@dataclass
class ChainComplexQ:
    """Ordered simplex bases and sparse boundary matrices of a simplicial complex.

    ``boundary[q]`` lists, for each q-simplex, its boundary as a sparse row
    over the (q-1)-simplices. Degree 0 maps to the empty face when
    ``reduced`` (the augmentation).
    """

    bases: dict[int, list[tuple[int, ...]]]
    index: dict[int, dict[tuple[int, ...], int]]
    reduced: bool
    _rank_cache: dict[int, int] = field(default_factory=dict, repr=False)

    @classmethod
    def of(cls, C: PolyComplex, reduced: bool = True) -> "ChainComplexQ":
        if not C.is_simplicial:
            raise NotSimplicialError("homology needs a simplicial complex; subdivide first")
        bases: dict[int, list[tuple[int, ...]]] = {}
        for f in C.faces:
            if f:
                bases.setdefault(len(f) - 1, []).append(face_key(f))
        for q in bases:
            bases[q].sort()
        index = {q: {s: i for i, s in enumerate(b)} for q, b in bases.items()}
        return cls(bases, index, reduced)

    @property
    def top(self) -> int:
        return max(self.bases, default=-1)

    def size(self, q: int) -> int:
        return len(self.bases.get(q, ()))

    def boundary(self, q: int) -> list[dict[int, int]]:
        if q == 0:
            if not self.reduced:
                return []
            return [{0: 1} for _ in self.bases.get(0, ())]
        lower = self.index.get(q - 1, {})
        rows = []
        for s in self.bases.get(q, ()):
            row = {}
            for i in range(len(s)):
                row[lower[s[:i] + s[i + 1 :]]] = -1 if i % 2 else 1
            rows.append(row)
        return rows

    def boundary_rank(self, q: int) -> int:
        r = self._rank_cache.get(q)
        if r is None:
            r = rank(self.boundary(q)) if q <= self.top else 0
            self._rank_cache[q] = r
        return r

    def check_dd_zero(self) -> bool:
        """Exact check that consecutive boundary maps compose to zero."""
        for q in range(1, self.top + 1):
            lower_rows = self.boundary(q - 1)
            for row in self.boundary(q):
                acc: dict[int, int] = {}
                for i, c in row.items():
                    for j, e in lower_rows[i].items():
                        acc[j] = acc.get(j, 0) + c * e
                if any(acc.values()):
                    return False
        return True

    def betti(self) -> list[int]:
        return [self.size(q) - self.boundary_rank(q) - self.boundary_rank(q + 1) for q in range(self.top + 1)]

    def cycles_dim(self, q: int) -> int:
        return self.size(q) - self.boundary_rank(q)


def betti(C: PolyComplex, reduced: bool = True) -> list[int]:
    """Rational Betti numbers in degrees ``0..dim C``."""
    return ChainComplexQ.of(C, reduced).betti()


@dataclass(frozen=True)
class HomologyMapReport:
    degree: int
    betti_sub: int
    betti_super: int
    image_rank: int
    reduced: bool


def induced_image_rank(A: PolyComplex, B: PolyComplex, degree: int, reduced: bool = True) -> HomologyMapReport:
    """Rank of ``H_degree(A) -> H_degree(B)`` for a subcomplex ``A`` of ``B``."""
    if not A.is_subcomplex_of(B):
        raise NotSubcomplexError("A is not a subcomplex of B")
    ca = ChainComplexQ.of(A, reduced)
    cb = ChainComplexQ.of(B, reduced)
    q = degree
    b_a = ca.betti()[q] if q <= ca.top else 0
    b_b = cb.betti()[q] if q <= cb.top else 0
    z_a = ca.cycles_dim(q)
    if z_a == 0:
        return HomologyMapReport(q, b_a, b_b, 0, reduced)
    # boundaries of B, projected onto the q-simplices of B outside A
    in_a = {cb.index[q][s] for s in ca.bases.get(q, ())}
    rows = cb.boundary(q + 1)
    full = cb.boundary_rank(q + 1)
    proj = rank({c: v for c, v in r.items() if c not in in_a} for r in rows)
    inside = full - proj
    image = z_a - inside
    return HomologyMapReport(q, b_a, b_b, image, reduced)


# -- alpha and the theorem checks --------------------------------------------


def _as_simplicial_pair(L: FaceLattice, W: Face, sd: PolyComplex | None = None) -> tuple[PolyComplex, PolyComplex]:
    pw = induced_subcomplex(L, W)
    cl = complement_closure(L, W)
    if pw.is_simplicial and cl.is_simplicial:
        return pw, cl
    if sd is None:
        sd = barycentric_subdivision(L.boundary(), 1)
    return subdivided_subcomplex(sd, pw), subdivided_subcomplex(sd, cl)


def alpha(L: FaceLattice, W: Iterable[str | int], k: int, sd: PolyComplex | None = None) -> HomologyMapReport:
    """``alpha_{k-1}(P_W)``: rank of reduced ``H_{k-1}(P_W) -> H_{k-1}(cl(bd P - P_{V-W}))``.

    Pass ``sd`` (the barycentric subdivision of ``L.boundary()``) to reuse
    it across calls on the same lattice.
    """
    if not 1 <= k <= L.dim / 2:
        raise ValueError(f"k={k} must satisfy 1 <= k <= d/2")
    w = L.vertex_indices(W)
    a, b = _as_simplicial_pair(L, w, sd)
    return induced_image_rank(a, b, k - 1, reduced=True)


@dataclass(frozen=True)
class QGLBTReport:
    lhs: int
    rhs: int
    holds: bool
    alpha: HomologyMapReport
    W: tuple[int, ...]
    k: int


def check_qglbt(L: FaceLattice, W: Iterable[str | int], k: int, sd: PolyComplex | None = None, g_k: int | None = None) -> QGLBTReport:
    """``C(d+1, k) * alpha_{k-1}(P_W) <= g_k(P)``."""
    if not 1 <= k <= L.dim / 2:
        raise ValueError(f"k={k} must satisfy 1 <= k <= d/2")
    w = L.vertex_indices(W)
    rep = alpha(L, w, k, sd)
    lhs = comb(L.dim + 1, k) * rep.image_rank
    rhs = toric_g(L)[k] if g_k is None else g_k
    return QGLBTReport(lhs, rhs, lhs <= rhs, rep, face_key(w), k)


DENSITIES = (0.2, 0.4, 0.6, 0.8)


def sample_vertex_sets(n: int, seed: int, per_density: int, densities: Sequence[float] = DENSITIES) -> list[tuple[int, ...]]:
    """Seeded Bernoulli vertex subsets, ``per_density`` at each density."""
    rng = random.Random(seed)
    out = []
    for p in densities:
        for _ in range(per_density):
            out.append(tuple(v for v in range(n) if rng.random() < p))
    return out


@dataclass
class ZeroMapReport:
    applicable: bool
    g_k: int
    k: int
    trials: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    missing: list[tuple[int, ...]] = field(default_factory=list)
    missing_outside_facets: list[tuple[int, ...]] = field(default_factory=list)
    note: str = ""

    @property
    def all_zero(self) -> bool:
        return all(a == 0 for _, a in self.trials)

    @property
    def holds(self) -> bool:
        return (not self.applicable) or (self.all_zero and not self.missing_outside_facets)


def check_zero_map(
    L: FaceLattice,
    k: int,
    W_samples: Iterable[Iterable[int]] | None = None,
    seed: int = 0,
    per_density: int = 13,
) -> ZeroMapReport:
    """When ``g_k = 0``: alpha_{k-1} vanishes and missing k-simplices lie in facets."""
    if not 1 <= k <= L.dim / 2:
        raise ValueError(f"k={k} must satisfy 1 <= k <= d/2")
    gk = toric_g(L)[k]
    if gk != 0:
        return ZeroMapReport(False, gk, k, note=f"not applicable, g_{k} = {gk} != 0")
    if W_samples is None:
        W_samples = sample_vertex_sets(L.n_vertices, seed, per_density)
    sd = None if L.is_simplicial() else barycentric_subdivision(L.boundary(), 1)
    rep = ZeroMapReport(True, gk, k)
    for W in W_samples:
        w = L.vertex_indices(W)
        a = alpha(L, w, k, sd).image_rank
        rep.trials.append((face_key(w), a))
    if k <= L.dim - 1:
        facets = L.facets()
        for sigma in missing_simplices(L, k):
            rep.missing.append(sigma)
            s = frozenset(sigma)
            if not any(s <= f for f in facets):
                rep.missing_outside_facets.append(sigma)
    return rep


def is_cohen_macaulay(C: PolyComplex) -> bool:
    """Reisner's criterion over Q: every link has vanishing reduced homology below its top dimension."""
    if not C.is_simplicial:
        raise NotSimplicialError("Cohen-Macaulay test needs a simplicial complex")
    dim = C.dim
    if any(len(f) - 1 != dim for f in C.maximal_faces()):
        return False
    for f in C.faces:
        lk = C.link(f)
        ld = lk.dim
        if ld <= 0:
            continue
        b = betti(lk, reduced=True)
        if any(b[i] for i in range(ld)):
            return False
    return True


def euler_characteristic_check(C: PolyComplex) -> bool:
    """Alternating sum of unreduced Betti numbers equals the face-count Euler characteristic."""
    b = betti(C, reduced=False)
    return sum((-1) ** i * x for i, x in enumerate(b)) == C.euler_characteristic()
