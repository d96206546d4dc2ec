"""Graded pieces of Stanley-Reisner rings modulo linear systems.

For a simplicial complex ``C`` on vertices ``x_v`` the degree-i part of the
face ring has the monomials supported on faces as a basis. Quotienting by
linear forms ``theta_1..theta_r`` removes the span of ``theta_j * m`` over
degree ``i-1`` monomials ``m``, so every dimension below is a count of
monomials minus an exact matrix rank.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Iterable, Sequence

from .complex import (
    EMPTY,
    Face,
    FaceLattice,
    PolyComplex,
    barycentric_subdivision,
    closed_neighborhood,
    closed_star,
    induced_subcomplex,
    is_k_simplicial,
    skeleton,
    subdivided_subcomplex,
)
from .geometry import HullResult
from .gvec import toric_g
from .homology import betti
from .linalg import Echelon, rank

MAX_DEGREE = 6
Monomial = tuple[int, ...]


class SRError(ValueError):
    pass


@dataclass(frozen=True)
class GeometricComplex:
    """A simplicial complex with rational vertex coordinates (indexed by vertex id)."""

    complex: PolyComplex
    coords: dict[int, tuple[Fraction, ...]]

    @property
    def dim(self) -> int:
        return len(next(iter(self.coords.values()))) if self.coords else 0

    @classmethod
    def boundary_of(cls, hull: HullResult, centered: bool = True) -> "GeometricComplex":
        L = hull.lattice
        if not L.is_simplicial():
            raise SRError("boundary is not simplicial")
        return cls(L.boundary(), _coords(hull, centered))

    def restrict(self, C: PolyComplex) -> "GeometricComplex":
        return GeometricComplex(C, {v: self.coords[v] for v in C.vertices})


def _coords(hull: HullResult, centered: bool) -> dict[int, tuple[Fraction, ...]]:
    pts = hull.coords
    if not centered:
        return dict(enumerate(pts))
    n = len(pts)
    d = len(pts[0])
    c = [sum(p[j] for p in pts) / n for j in range(d)]
    return {i: tuple(p[j] - c[j] for j in range(d)) for i, p in enumerate(pts)}


@dataclass(frozen=True)
class LinearSystem:
    """Linear forms as vertex-indexed coefficient maps, plus an optional Lefschetz form."""

    forms: tuple[dict[int, Fraction], ...]
    mode: str  # "embedding" | "generic"
    lefschetz: dict[int, Fraction] | None = None

    def with_lefschetz(self, ell: dict[int, Fraction]) -> "LinearSystem":
        return LinearSystem(self.forms, self.mode, ell)

    def all_forms(self) -> list[dict[int, Fraction]]:
        return list(self.forms) + ([self.lefschetz] if self.lefschetz is not None else [])


def embedding_system(gc: GeometricComplex) -> LinearSystem:
    """theta_j = sum_v (coordinate j of v) x_v."""
    d = gc.dim
    forms = tuple({v: p[j] for v, p in gc.coords.items() if p[j]} for j in range(d))
    return LinearSystem(forms, "embedding")


def generic_system(vertices: Iterable[int], d: int, seed: int, bound: int = 1000) -> LinearSystem:
    rng = random.Random(seed)
    vs = sorted(vertices)
    forms = tuple({v: Fraction(rng.randint(-bound, bound)) for v in vs} for _ in range(d))
    return LinearSystem(forms, "generic")


def random_form(vertices: Iterable[int], seed: int, bound: int = 1000) -> dict[int, Fraction]:
    rng = random.Random(seed)
    return {v: Fraction(rng.randint(-bound, bound)) for v in sorted(vertices)}


def _int_form(form: dict[int, Fraction]) -> dict[int, int]:
    den = 1
    for c in form.values():
        den = lcm(den, Fraction(c).denominator)
    return {v: int(c * den) for v, c in form.items() if c}


def monomials(C: PolyComplex, degree: int) -> list[Monomial]:
    """Degree-``degree`` monomials (sorted vertex multisets) supported on faces."""
    if degree == 0:
        return [()]
    out = []
    for f in C.faces:
        s = len(f)
        if s == 0 or s > degree:
            continue
        verts = sorted(f)
        # distribute the extra degree - s exponents over the support
        for extra in _multisets(verts, degree - s):
            out.append(tuple(sorted(verts + list(extra))))
    out.sort()
    return out


def _multisets(items: list[int], r: int) -> Iterable[tuple[int, ...]]:
    if r == 0:
        yield ()
        return
    from itertools import combinations_with_replacement

    yield from combinations_with_replacement(items, r)


def _relation_rows(
    C: PolyComplex,
    forms: Sequence[dict[int, int]],
    degree: int,
    index: dict[Monomial, int],
    offset: int = 0,
) -> list[dict[int, int]]:
    """Rows ``form * m`` for degree-(degree-1) monomials ``m``, in the degree-``degree`` basis."""
    if degree == 0:
        return []
    faces = C.faces
    rows = []
    for m in monomials(C, degree - 1):
        supp = frozenset(m)
        for form in forms:
            row = {}
            for v, c in form.items():
                if (supp | {v}) in faces:
                    key = tuple(sorted(m + (v,)))
                    row[index[key] + offset] = c
            if row:
                rows.append(row)
    return rows


def _check_spanning(gc: GeometricComplex, ls: LinearSystem) -> None:
    from .linalg import rank_rational

    verts = sorted(gc.complex.vertices)
    if ls.mode == "embedding" and verts:
        r = rank_rational({i: f.get(v, 0) for i, v in enumerate(verts)} for f in ls.forms)
        if r < len(ls.forms):
            raise SRError("vertex coordinates do not span the ambient space")


@dataclass(frozen=True)
class GradedDims:
    dims: tuple[int, ...]
    mode: str
    fingerprint: str = ""


def graded_dims(C: PolyComplex, forms: Sequence[dict[int, Fraction]], cap: int) -> list[int]:
    iforms = [_int_form(f) for f in forms]
    out = []
    for i in range(cap + 1):
        mons = monomials(C, i)
        index = {m: j for j, m in enumerate(mons)}
        out.append(len(mons) - rank(_relation_rows(C, iforms, i, index)))
    return out


def sr_artinian_dims(gc: GeometricComplex, ls: LinearSystem | None = None, cap: int = 4) -> GradedDims:
    """Dimensions of the degree 0..cap parts of k[C]/(linear system)."""
    if cap > MAX_DEGREE:
        raise SRError(f"degree cap {cap} exceeds policy {MAX_DEGREE}")
    if not gc.complex.is_simplicial:
        raise SRError("complex must be simplicial")
    ls = ls or embedding_system(gc)
    _check_spanning(gc, ls)
    dims = graded_dims(gc.complex, ls.all_forms(), cap)
    fp = f"f={gc.complex.f_vector()}"
    return GradedDims(tuple(dims), ls.mode, fp)


# -- skeleton reductions against toric h ----------------------------------------


@dataclass
class PropCheckReport:
    k: int
    a_dims: list[int]
    toric_h: list[int]
    hard_equal: bool
    exploratory: dict[int, bool]


def prop_ih_a_check(hull: HullResult, k: int) -> PropCheckReport:
    """Compare dims of A^i of the (2k-1)-skeleton with toric h_i for i <= 2k."""
    L = hull.lattice
    d = L.dim
    if not 1 <= k or 2 * k - 1 > d - 1:
        raise SRError(f"k={k} out of range for d={d}")
    if not is_k_simplicial(L, 2 * k - 1):
        raise SRError(f"lattice is not {2 * k - 1}-simplicial")
    sk = skeleton(L, 2 * k - 1)
    gc = GeometricComplex(sk, _coords(hull, True))
    cap = min(2 * k, d)
    dims = list(sr_artinian_dims(gc, cap=cap).dims)
    h = list(toric_g(L).h)
    hard = all(dims[i] == h[i] for i in range(k + 1))
    expl = {i: dims[i] == h[i] for i in range(k + 1, cap + 1)}
    return PropCheckReport(k, dims, h[: cap + 1], hard, expl)


# -- Lefschetz -----------------------------------------------------------------


@dataclass
class LefschetzReport:
    k: int
    dim_a_k_minus_1: int
    dim_a_k: int
    quotient_dim: int
    injective: bool
    seeds_tried: list[int]


class GenericityError(RuntimeError):
    pass


def _quotient_dims(C: PolyComplex, theta, ell, k: int) -> tuple[int, int, int]:
    iforms = [_int_form(f) for f in theta]
    iell = _int_form(ell)
    res = []
    for i in (k - 1, k):
        mons = monomials(C, i)
        index = {m: j for j, m in enumerate(mons)}
        res.append(len(mons) - rank(_relation_rows(C, iforms, i, index)))
    mons = monomials(C, k)
    index = {m: j for j, m in enumerate(mons)}
    q = len(mons) - rank(_relation_rows(C, iforms + [iell], k, index))
    return res[0], res[1], q


def lefschetz_injectivity(gc: GeometricComplex, k: int, seed: int = 0, retries: int = 5) -> LefschetzReport:
    """Multiplication by a seeded random form ``l: A^{k-1} -> A^k`` and ``dim A^k / l A^{k-1}``."""
    d = gc.dim
    if not 1 <= k <= d / 2:
        raise SRError(f"k={k} must satisfy 1 <= k <= d/2")
    ls = embedding_system(gc)
    seeds = []
    for attempt in range(retries):
        s = seed + attempt
        seeds.append(s)
        ell = random_form(gc.complex.vertices, s)
        a_prev, a_k, q = _quotient_dims(gc.complex, ls.forms, ell, k)
        injective = a_k - q == a_prev
        if injective:
            return LefschetzReport(k, a_prev, a_k, q, True, seeds)
    raise GenericityError(f"multiplication not injective for seeds {seeds}")


# -- socle / kernel identities -----------------------------------------------


@dataclass
class Subdivided:
    """Boundary of a polytope subdivided barycentrically twice, with coordinates."""

    lattice: FaceLattice
    sd1: PolyComplex
    sd2: PolyComplex
    geometric: GeometricComplex

    @classmethod
    def of(cls, hull: HullResult) -> "Subdivided":
        L = hull.lattice
        base = _coords(hull, True)
        sd1 = barycentric_subdivision(L.boundary(), 1)
        c1 = {i: _barycenter(base, f) for i, f in enumerate(sd1.provenance)}
        sd2 = barycentric_subdivision(sd1, 1)
        c2 = {i: _barycenter(c1, f) for i, f in enumerate(sd2.provenance)}
        return cls(L, sd1, sd2, GeometricComplex(sd2, c2))

    def induced_vertices(self, W: Iterable[int]) -> frozenset[int]:
        """Vertices of the doubly subdivided ``P_W``."""
        pw = induced_subcomplex(self.lattice, W)
        s1 = subdivided_subcomplex(self.sd1, pw)
        s2 = subdivided_subcomplex(self.sd2, s1)
        return s2.vertices

    def neighborhood(self, W: Iterable[int]) -> tuple[PolyComplex, frozenset[int]]:
        w2 = self.induced_vertices(W)
        return closed_neighborhood(self.sd2, w2), w2


def _barycenter(coords: dict[int, tuple[Fraction, ...]], f: Face) -> tuple[Fraction, ...]:
    pts = [coords[v] for v in f]
    n = len(pts)
    return tuple(sum(p[j] for p in pts) / n for j in range(len(pts[0])))


@dataclass
class KernelReport:
    k: int
    d: int
    kernel_dim: int
    betti_target: int
    holds: bool
    a_dims: list[int] = field(default_factory=list)
    b_dims: list[int] = field(default_factory=list)
    kernel_dims: list[int] = field(default_factory=list)
    n_vertices: int = 0
    reduced_betti: list[int] = field(default_factory=list)


def restriction_kernel_dim(N: PolyComplex, stars: dict[int, PolyComplex], forms: Sequence[dict[int, Fraction]], degree: int) -> tuple[int, int]:
    """``(dim Q^degree(N), dim ker[Q(N) -> (+)_w Q(st_w)])`` with Q = face ring / forms.

    The star rings are face-ring restrictions of N (monomials not supported
    on the star are sent to zero).
    """
    iforms = [_int_form(f) for f in forms]
    mons = monomials(N, degree)
    index = {m: j for j, m in enumerate(mons)}
    dim_q = len(mons) - rank(_relation_rows(N, iforms, degree, index))
    # target coordinates (w, monomial of st_w)
    offsets: dict[int, int] = {}
    star_index: dict[int, dict[Monomial, int]] = {}
    total = 0
    ech = Echelon()
    rel_rows: list[dict[int, int]] = []
    for w in sorted(stars):
        S = stars[w]
        smons = monomials(S, degree)
        star_index[w] = {m: j for j, m in enumerate(smons)}
        offsets[w] = total
        rel_rows.extend(_relation_rows(S, iforms, degree, star_index[w], total))
        total += len(smons)
    rel_rows.sort(key=len)
    for r in rel_rows:
        ech.add(r)
    base_rank = ech.rank
    for m in mons:
        row = {}
        for w, idx in star_index.items():
            j = idx.get(m)
            if j is not None:
                row[offsets[w] + j] = 1
        if row:
            ech.add(row)
    image = ech.rank - base_rank
    return dim_q, dim_q - image


def socle_kernel_dims(sub: Subdivided, W: Iterable[int], k: int) -> KernelReport:
    """Kernel of ``A^k(N) -> (+)_w A^k(st_w N)`` against ``C(d,k) * reduced b^{k-1}(N)``.

    ``N`` is the closed neighborhood of the doubly subdivided ``P_W``.
    """
    d = sub.lattice.dim
    if k < 1:
        raise SRError("k must be >= 1")
    N, w2 = sub.neighborhood(sub.lattice.vertex_indices(W))
    gc = sub.geometric.restrict(N)
    ls = embedding_system(gc)
    stars = {w: closed_star(N, w) for w in w2}
    a_dims, ker_dims = [], []
    for i in range(k + 1):
        a, kd = restriction_kernel_dim(N, stars, ls.forms, i)
        a_dims.append(a)
        ker_dims.append(kd)
    b = betti(N, reduced=True)
    bk = b[k - 1] if k - 1 < len(b) else 0
    target = comb(d, k) * bk
    return KernelReport(
        k=k,
        d=d,
        kernel_dim=ker_dims[k],
        betti_target=target,
        holds=ker_dims[k] == target,
        a_dims=a_dims,
        b_dims=[a - x for a, x in zip(a_dims, ker_dims)],
        kernel_dims=ker_dims,
        n_vertices=len(N.vertices),
        reduced_betti=b,
    )


def strengthened_kernel_check(sub: Subdivided, W: Iterable[int], k: int, seed: int = 0) -> KernelReport:
    """Same kernel after also dividing by a Lefschetz form; compared with ``C(d+1,k) * b^{k-1}``."""
    d = sub.lattice.dim
    if d <= 2 * k:
        raise SRError(f"requires d > 2k (d={d}, k={k})")
    N, w2 = sub.neighborhood(sub.lattice.vertex_indices(W))
    gc = sub.geometric.restrict(N)
    ls = embedding_system(gc).with_lefschetz(random_form(N.vertices, seed))
    stars = {w: closed_star(N, w) for w in w2}
    a, kd = restriction_kernel_dim(N, stars, ls.all_forms(), k)
    b = betti(N, reduced=True)
    bk = b[k - 1] if k - 1 < len(b) else 0
    target = comb(d + 1, k) * bk
    return KernelReport(k=k, d=d, kernel_dim=kd, betti_target=target, holds=kd == target, a_dims=[a], kernel_dims=[kd], n_vertices=len(N.vertices), reduced_betti=b)
