"""Exact-rational point configurations, convex hulls and polytope generators.

All predicates are evaluated in integer arithmetic: a configuration is
scaled by the lcm of its coordinate denominators before any orientation
test, so no floating point is ever involved in a combinatorial decision.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial, isqrt, lcm
from typing import Iterable, Sequence

from .complex import Face, FaceLattice, face_key
from .linalg import dense_rank, determinant, nullspace_vector

MAX_DIM = 8
MAX_POINTS = 2000


class GeometryError(ValueError):
    pass


class DegenerateError(GeometryError):
    """The points do not affinely span the ambient space."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise GeometryError(f"floating point coordinate {x!r}; convert to an exact rational first")
    return Fraction(x)


@dataclass(frozen=True)
class PointConfiguration:
    """Labelled points with exact rational coordinates in ``dim``-space."""

    dim: int
    points: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        pts = tuple(tuple(_frac(c) for c in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(len(pts))))
        if len(self.labels) != len(pts):
            raise GeometryError("one label per point required")
        if len(set(self.labels)) != len(self.labels):
            raise GeometryError("labels must be unique")
        for p in pts:
            if len(p) != self.dim:
                raise GeometryError(f"point {p} does not have {self.dim} coordinates")
        if len(set(pts)) != len(pts):
            raise GeometryError("points must be distinct")

    def __len__(self) -> int:
        return len(self.points)

    def integer_points(self) -> tuple[list[tuple[int, ...]], int]:
        """Points scaled to integers, and the common scale factor."""
        s = 1
        for p in self.points:
            for c in p:
                s = lcm(s, c.denominator)
        return [tuple(int(c * s) for c in p) for p in self.points], s

    def subset(self, indices: Sequence[int]) -> "PointConfiguration":
        return PointConfiguration(self.dim, tuple(self.points[i] for i in indices), tuple(self.labels[i] for i in indices))

    def affine_image(self, matrix: Sequence[Sequence[Fraction]], shift: Sequence[Fraction]) -> "PointConfiguration":
        pts = tuple(
            tuple(sum((Fraction(matrix[r][c]) * p[c] for c in range(self.dim)), Fraction(0)) + Fraction(shift[r]) for r in range(self.dim))
            for p in self.points
        )
        return PointConfiguration(self.dim, pts, self.labels)


@dataclass(frozen=True)
class HullResult:
    lattice: FaceLattice
    # one (normal, offset) per lattice facet, in lattice.facets() order: normal . x <= offset
    facet_hyperplanes: tuple[tuple[tuple[int, ...], Fraction], ...]
    vertex_subset: tuple[str, ...]
    vertex_indices: tuple[int, ...]
    coords: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.lattice.dim


# -- small exact helpers ------------------------------------------------------


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _affine_rank(X: Sequence[Sequence[int]], idx: Sequence[int]) -> int:
    if not idx:
        return -1
    base = X[idx[0]]
    return dense_rank([list(_sub(X[i], base)) for i in idx[1:]])


def _independent_subset(X, idx: Sequence[int], want: int) -> list[int]:
    """Greedily pick ``want`` affinely independent points among ``idx``."""
    chosen = [idx[0]]
    for i in idx[1:]:
        if len(chosen) == want:
            break
        if _affine_rank(X, chosen + [i]) == len(chosen):
            chosen.append(i)
    return chosen


def _hyperplane(X, idx: Sequence[int]) -> tuple[tuple[int, ...], int] | None:
    """Primitive integer hyperplane ``a.x = b`` through the d points ``idx``."""
    base = X[idx[0]]
    rows = [list(_sub(X[i], base)) for i in idx[1:]]
    a = nullspace_vector(rows) if rows else [1]
    if a is None:
        return None
    a = tuple(a)
    return a, _dot(a, base)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class _Facet:
    __slots__ = ("a", "b", "pts")

    def __init__(self, a, b, pts):
        self.a = a
        self.b = b
        self.pts = pts


def convex_hull(pc: PointConfiguration) -> HullResult:
    """Beneath-beyond convex hull with exact integer predicates.

    Coplanar points are handled by keeping facets as hyperplanes with point
    sets; points that end up in a facet without being vertices are removed
    at the end.
    """
    d = pc.dim
    n = len(pc.points)
    if d < 1:
        raise GeometryError("dimension must be at least 1")
    if d > MAX_DIM:
        raise GeometryError(f"dimension {d} exceeds the policy cap {MAX_DIM}")
    if n > MAX_POINTS:
        raise GeometryError(f"{n} points exceed the policy cap {MAX_POINTS}")
    X, scale = pc.integer_points()
    order = sorted(range(n), key=lambda i: X[i])
    if n < d + 1:
        raise DegenerateError("fewer than d+1 points")
    init = _independent_subset(X, order, d + 1)
    if len(init) < d + 1:
        raise DegenerateError("points do not affinely span the ambient space")
    centre = tuple(sum(X[i][c] for i in init) for c in range(d))  # (d+1) * centroid
    k = d + 1

    def oriented(a, b):
        if _dot(a, centre) >= k * b:
            a = tuple(-x for x in a)
            b = -b
        return a, b

    facets: dict[int, _Facet] = {}
    inc: dict[int, set[int]] = {}
    next_id = 0

    def add_facet(a, b, pts):
        nonlocal next_id
        fid = next_id
        next_id += 1
        facets[fid] = _Facet(a, b, pts)
        for p in _bits(pts):
            inc.setdefault(p, set()).add(fid)
        return fid

    def drop_facet(fid):
        f = facets.pop(fid)
        for p in _bits(f.pts):
            inc[p].discard(fid)

    for i in init:
        others = [j for j in init if j != i]
        a, b = oriented(*_hyperplane(X, others))
        mask = 0
        for j in others:
            mask |= 1 << j
        add_facet(a, b, mask)
    active = 0
    for i in init:
        active |= 1 << i
    active_list = list(init)

    for p in order:
        if (active >> p) & 1:
            continue
        xp = X[p]
        visible = []
        coplanar = []
        for fid, f in facets.items():
            s = _dot(f.a, xp) - f.b
            if s > 0:
                visible.append(fid)
            elif s == 0:
                coplanar.append(fid)
        if not visible:
            continue
        bit = 1 << p
        vis_set = set(visible)
        cop_set = set(coplanar)
        new: dict[tuple, int] = {}
        for fid in visible:
            f = facets[fid]
            nbrs = set()
            for q in _bits(f.pts):
                nbrs |= inc[q]
            for gid in nbrs:
                if gid in vis_set or gid in cop_set:
                    continue
                g = facets[gid]
                inter = f.pts & g.pts
                if inter.bit_count() < d - 1:
                    continue
                ridge = _bits(inter)
                if _affine_rank(X, ridge) != d - 2:
                    continue
                basis = _independent_subset(X, ridge, d - 1) if d > 1 else []
                h = _hyperplane(X, basis + [p])
                if h is None:
                    raise GeometryError("internal error: degenerate horizon ridge")
                a, b = oriented(*h)
                new[(a, b)] = new.get((a, b), 0) | inter | bit
        for fid in coplanar:
            facets[fid].pts |= bit
            inc.setdefault(p, set()).add(fid)
        for fid in visible:
            drop_facet(fid)
        active |= bit
        active_list.append(p)
        for (a, b), pts in new.items():
            for q in active_list:
                if not (pts >> q) & 1 and _dot(a, X[q]) == b:
                    pts |= 1 << q
            add_facet(a, b, pts)

    # vertices: points that are the only point of the intersection of their facets
    vertex_mask = 0
    for q in _bits(active):
        fids = inc.get(q, ())
        if not fids:
            continue
        m = -1
        for fid in fids:
            m &= facets[fid].pts
        if m == 1 << q:
            vertex_mask |= 1 << q
    vidx = sorted(_bits(vertex_mask))
    pos = {v: i for i, v in enumerate(vidx)}
    facet_sets = []
    planes = {}
    for f in facets.values():
        fs = frozenset(pos[q] for q in _bits(f.pts & vertex_mask))
        facet_sets.append(fs)
        planes[fs] = (f.a, Fraction(f.b, scale))
    labels = tuple(pc.labels[i] for i in vidx)
    lattice = FaceLattice.from_facets(d, facet_sets, labels, validate=False)
    ordered = lattice.facets()
    return HullResult(
        lattice=lattice,
        facet_hyperplanes=tuple(planes[fs] for fs in ordered),
        vertex_subset=labels,
        vertex_indices=tuple(vidx),
        coords=tuple(pc.points[i] for i in vidx),
    )


# -- volumes and triangulations ------------------------------------------------


def simplex_volume(points: Sequence[Sequence[Fraction]]) -> Fraction:
    """Unsigned volume of a full-dimensional simplex."""
    d = len(points) - 1
    base = points[0]
    rows = [[Fraction(x) - Fraction(y) for x, y in zip(p, base)] for p in points[1:]]
    s = 1
    for r in rows:
        for x in r:
            s = lcm(s, x.denominator)
    det = determinant([[int(x * s) for x in r] for r in rows])
    return Fraction(abs(det), s**d * factorial(d))


def pulling_triangulation(L: FaceLattice) -> list[tuple[int, ...]]:
    """Pulling triangulation of a polytope from its face lattice (vertex indices)."""
    cache: dict[Face, list[tuple[int, ...]]] = {}
    faces = L.faces

    def tri(f: Face) -> list[tuple[int, ...]]:
        r = cache.get(f)
        if r is not None:
            return r
        dim = faces[f]
        if len(f) == dim + 1:
            r = [face_key(f)]
        else:
            v = min(f)
            r = []
            for g in L.subfaces(f):
                if faces[g] == dim - 1 and v not in g:
                    for t in tri(g):
                        r.append(face_key(t + (v,)))
        cache[f] = r
        return r

    return sorted(tri(L.top))


def hull_volume(h: HullResult) -> Fraction:
    return sum((simplex_volume([h.coords[i] for i in t]) for t in pulling_triangulation(h.lattice)), Fraction(0))


@dataclass
class TriangulationReport:
    valid: bool
    nondegenerate: bool
    volume_ok: bool
    intersections_ok: bool | None
    mode: str
    simplex_volume_sum: Fraction
    hull_volume: Fraction
    failure: str = ""


PAIRWISE_LIMIT = 200


def _proper_intersection(P, s: tuple[int, ...], t: tuple[int, ...]) -> bool:
    """True iff conv(s) and conv(t) meet in the common face conv(s & t).

    Improper intersection is equivalent to an affine dependence whose
    positive part lies in ``s`` and negative part in ``t`` (circuit
    criterion). Such a dependence is searched among circuits of ``s | t``.
    """
    S, T = set(s), set(t)
    only_s = sorted(S - T)
    only_t = sorted(T - S)
    if not only_s or not only_t:
        return True
    d = len(P[0])
    # cheap separation by a coordinate direction
    for c in range(d):
        if max(P[i][c] for i in s) < min(P[i][c] for i in t) or max(P[i][c] for i in t) < min(P[i][c] for i in s):
            return True
    common = sorted(S & T)
    universe = only_s + only_t + common
    for r in range(2, min(len(universe), d + 2) + 1):
        for sub in combinations(universe, r):
            if not (set(sub) & S - T) or not (set(sub) & T - S):
                continue
            lam = _circuit_vector(P, sub)
            if lam is None:
                continue
            for sign in (1, -1):
                pos = {i for i, x in zip(sub, lam) if sign * x > 0}
                neg = {i for i, x in zip(sub, lam) if sign * x < 0}
                if pos <= S and neg <= T:
                    return False
    return True


def _circuit_vector(P, sub: Sequence[int]) -> list[Fraction] | None:
    """Affine dependence of ``sub`` if ``sub`` is a circuit, else None."""
    from .linalg import kernel_basis

    d = len(P[0])
    m = [[P[i][c] for i in sub] for c in range(d)] + [[1] * len(sub)]
    ker = kernel_basis(m, len(sub))
    if len(ker) != 1:
        return None
    v = ker[0]
    if any(x == 0 for x in v):
        return None
    return v


def verify_triangulation(pc: PointConfiguration, simplices: Iterable[Sequence[int]], hull: HullResult | None = None) -> TriangulationReport:
    """Exact check that ``simplices`` (point indices) triangulate conv(pc)."""
    simplices = [tuple(sorted(s)) for s in simplices]
    n = len(pc.points)
    d = pc.dim
    for s in simplices:
        if len(s) != d + 1 or len(set(s)) != d + 1:
            raise GeometryError(f"simplex {s} does not have {d + 1} distinct vertices")
        for i in s:
            if not 0 <= i < n:
                raise IndexError(f"point index {i} out of range")
    hull = hull or convex_hull(pc)
    hv = hull_volume(hull)
    P = pc.points
    vols = [simplex_volume([P[i] for i in s]) for s in simplices]
    total = sum(vols, Fraction(0))
    if any(v == 0 for v in vols):
        return TriangulationReport(False, False, total == hv, None, "full", total, hv, "degenerate simplex")
    volume_ok = total == hv
    if not volume_ok:
        kind = "volume deficit" if total < hv else "volume excess"
        return TriangulationReport(False, True, False, None, "full", total, hv, kind)
    if len(simplices) <= PAIRWISE_LIMIT:
        for a, b in combinations(simplices, 2):
            if not _proper_intersection(P, a, b):
                return TriangulationReport(False, True, True, False, "full", total, hv, f"simplices {a} and {b} intersect improperly")
        return TriangulationReport(True, True, True, True, "full", total, hv)
    ok, msg = _facet_coverage(pc, simplices, hull)
    return TriangulationReport(ok, True, True, None, "volume+coverage", total, hv, msg)


def _facet_coverage(pc, simplices, hull: HullResult) -> tuple[bool, str]:
    """Every ridge of the simplices is shared by two simplices or lies in a hull facet."""
    X, s = pc.integer_points()
    count: dict[tuple[int, ...], int] = {}
    for t in simplices:
        for r in combinations(t, len(t) - 1):
            count[r] = count.get(r, 0) + 1
    planes = [(a, b * s) for a, b in hull.facet_hyperplanes]
    for r, c in count.items():
        on_boundary = any(all(_dot(a, X[i]) == b for i in r) for a, b in planes)
        if (on_boundary and c != 1) or (not on_boundary and c != 2):
            return False, f"ridge {r} covered {c} times"
    return True, ""


# -- generators ----------------------------------------------------------------


def _config(points, labels=None) -> PointConfiguration:
    points = [tuple(Fraction(c) for c in p) for p in points]
    return PointConfiguration(len(points[0]), tuple(points), tuple(labels) if labels else ())


def simplex(d: int) -> PointConfiguration:
    if d < 1:
        raise ValueError("d must be >= 1")
    pts = [[0] * d] + [[1 if j == i else 0 for j in range(d)] for i in range(d)]
    return _config(pts)


def cube(d: int) -> PointConfiguration:
    if d < 1:
        raise ValueError("d must be >= 1")
    pts = [[(m >> (d - 1 - j)) & 1 for j in range(d)] for m in range(2**d)]
    return _config(pts)


def cross_polytope(d: int) -> PointConfiguration:
    if d < 1:
        raise ValueError("d must be >= 1")
    pts = []
    for i in range(d):
        for s in (1, -1):
            pts.append([s if j == i else 0 for j in range(d)])
    return _config(pts)


def cyclic(d: int, n: int, params: Sequence[Fraction] | None = None) -> PointConfiguration:
    """Points on the moment curve ``t -> (t, t^2, ..., t^d)``; default ``t = 0..n-1``."""
    if d < 2 or n < d + 1:
        raise ValueError("cyclic polytope needs d >= 2 and n >= d+1")
    ts = [Fraction(t) for t in (params if params is not None else range(n))]
    if len(set(ts)) != n:
        raise ValueError("moment curve parameters must be distinct")
    return _config([[t**e for e in range(1, d + 1)] for t in ts])


def hypersimplex(k: int, n: int) -> PointConfiguration:
    """The hypersimplex Delta(k, n), projected to its first ``n-1`` coordinates."""
    if not 0 < k < n or n < 3:
        raise ValueError("need 0 < k < n and n >= 3")
    pts = []
    for ones in combinations(range(n), k):
        v = [1 if i in ones else 0 for i in range(n)]
        pts.append(v[:-1])
    return _config(pts)


def pyramid(pc: PointConfiguration) -> PointConfiguration:
    """Pyramid over ``pc``: apex one unit above the vertex centroid."""
    n = len(pc.points)
    cen = [sum(p[c] for p in pc.points) / n for c in range(pc.dim)]
    pts = [tuple(p) + (Fraction(0),) for p in pc.points] + [tuple(cen) + (Fraction(1),)]
    return PointConfiguration(pc.dim + 1, tuple(pts), pc.labels + (_fresh_label(pc.labels),))


def prism(pc: PointConfiguration) -> PointConfiguration:
    pts = [tuple(p) + (Fraction(0),) for p in pc.points] + [tuple(p) + (Fraction(1),) for p in pc.points]
    labels = tuple(f"{x}_0" for x in pc.labels) + tuple(f"{x}_1" for x in pc.labels)
    return PointConfiguration(pc.dim + 1, tuple(pts), labels)


def _fresh_label(labels: Sequence[str]) -> str:
    taken = set(labels)
    i = len(labels)
    while str(i) in taken:
        i += 1
    return str(i)


def stacked_with_simplices(d: int, m: int, seed: int | None = 0, chain: bool = False) -> tuple[PointConfiguration, list[tuple[int, ...]]]:
    """Stacked ``d``-polytope with ``d+1+m`` vertices and its stacking simplices.

    Each step puts a new apex over a facet's barycenter, at half the largest
    height for which the apex is beyond that facet only. ``chain=True``
    always stacks on the facet of the newest simplex opposite its oldest
    vertex, producing a path of simplices.
    """
    if d < 2 or m < 0:
        raise ValueError("need d >= 2 and m >= 0")
    rng = random.Random(seed)
    pts: list[tuple[Fraction, ...]] = list(simplex(d).points)
    interior = tuple(sum(p[c] for p in pts) / (d + 1) for c in range(d))
    simplices = [tuple(range(d + 1))]

    def plane(f):
        base = pts[f[0]]
        rows = [[x - y for x, y in zip(pts[i], base)] for i in f[1:]]
        s = 1
        for r in rows:
            for x in r:
                s = lcm(s, x.denominator)
        a = nullspace_vector([[int(x * s) for x in r] for r in rows])
        b = _dot(a, base)
        if _dot(a, interior) > b:
            a = [-x for x in a]
            b = -b
        return tuple(a), b

    facets = {tuple(sorted(f)): plane(f) for f in combinations(range(d + 1), d)}
    for _ in range(m):
        if chain:
            # vertex indices grow with time, so the oldest vertex is the smallest
            newest = simplices[-1]
            target = tuple(sorted(newest))[1:]
        else:
            target = rng.choice(sorted(facets))
        a, b = facets[target]
        bary = tuple(sum(pts[i][c] for i in target) / d for c in range(d))
        tmax = None
        for g, (ag, bg) in facets.items():
            if g == target:
                continue
            rate = _dot(ag, a)
            if rate > 0:
                t = (bg - _dot(ag, bary)) / rate
                tmax = t if tmax is None else min(tmax, t)
        if tmax is not None and tmax <= 0:
            raise GeometryError("no valid stacking height")
        # unbounded when every other facet tilts away from the normal
        t = tmax / 2 if tmax is not None else Fraction(1)
        apex = tuple(bary[c] + t * a[c] for c in range(d))
        v = len(pts)
        pts.append(apex)
        del facets[target]
        for u in target:
            nf = tuple(sorted(set(target) - {u} | {v}))
            facets[nf] = plane(nf)
        simplices.append(tuple(sorted(target)) + (v,))
    return _config(pts), [tuple(sorted(s)) for s in simplices]


def stacked(d: int, m: int, seed: int | None = 0, chain: bool = False) -> PointConfiguration:
    return stacked_with_simplices(d, m, seed, chain)[0]


# -- sphere approximation ------------------------------------------------------

SPHERE_BITS = 40
SPHERE_TOL = Fraction(1, 2**30)


def _sphere_point(rng: random.Random, d: int) -> tuple[Fraction, ...]:
    """Uniform direction from normalized Gaussians, rounded to a dyadic grid."""
    while True:
        g = [rng.gauss(0.0, 1.0) for _ in range(d)]
        r = sum(x * x for x in g) ** 0.5
        if r == 0:
            continue
        p = tuple(Fraction(round(x / r * 2**SPHERE_BITS), 2**SPHERE_BITS) for x in g)
        nrm = sum(c * c for c in p)
        if (1 - SPHERE_TOL) ** 2 <= nrm <= (1 + SPHERE_TOL) ** 2:
            return p


def sample_sphere_polytope(d: int, n: int, seed: int, retries: int = 10) -> PointConfiguration:
    """``n`` seeded points near the unit sphere (prefix-stable in ``n``).

    Uses ``random.Random(seed).gauss`` for each coordinate, normalizes, and
    rounds to denominators ``2**40``; every point is within ``2**-30`` of the
    sphere. Degenerate samples are redrawn from the continuing stream.
    """
    if n < d + 1:
        raise ValueError("need n >= d+1")
    rng = random.Random(seed)
    for _ in range(retries):
        pts = []
        seen = set()
        while len(pts) < n:
            p = _sphere_point(rng, d)
            if p not in seen:
                seen.add(p)
                pts.append(p)
        pc = _config(pts)
        X, _ = pc.integer_points()
        if len(_independent_subset(X, list(range(n)), d + 1)) == d + 1:
            return pc
    raise DegenerateError("could not draw a full-dimensional sample")


def _sqrt_upper(x: Fraction, bits: int = 64) -> Fraction:
    """Rational upper bound of sqrt(x), exact when x is a rational square."""
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    scale = 1 << bits
    # sqrt(num/den) = sqrt(num*den)/den
    q = isqrt(num * den * scale * scale)
    return Fraction(q + 1, den * scale)


def hausdorff_eps(pc: PointConfiguration, hull: HullResult | None = None) -> Fraction:
    """Rational upper bound on the Hausdorff distance between conv(pc) and the unit ball.

    The ball part is ``1 - min facet distance from the origin`` (the polytope
    contains the ball of that radius); vertices outside the sphere add their
    excess radius.
    """
    hull = hull or convex_hull(pc)
    worst = Fraction(0)
    for a, b in hull.facet_hyperplanes:
        if b <= 0:
            raise GeometryError("origin is not interior to the polytope")
        norm = _sqrt_upper(Fraction(sum(x * x for x in a)))
        dist_lb = b / norm
        worst = max(worst, 1 - dist_lb)
    for p in hull.coords:
        r2 = sum(c * c for c in p)
        if r2 > 1:
            worst = max(worst, _sqrt_upper(r2) - 1)
    return worst


# -- GLBT triangulation --------------------------------------------------------


@dataclass
class GLBTResult:
    k: int
    g_k: int
    simplices: list[tuple[int, ...]]
    report: TriangulationReport

    @property
    def verdict(self) -> bool:
        return self.report.valid

    @property
    def consistent(self) -> bool:
        """False only when g_k = 0 but the candidate simplices do not triangulate."""
        return self.g_k != 0 or self.verdict


def glbt_triangulation(pc: PointConfiguration, k: int) -> GLBTResult:
    """Candidate simplices (point indices) with k-subsets in the boundary, and their verdict."""
    from .complex import glbt_candidate_simplices
    from .gvec import toric_g

    hull = convex_hull(pc)
    L = hull.lattice
    cands = glbt_candidate_simplices(L, k)
    simplices = sorted(tuple(sorted(hull.vertex_indices[i] for i in c)) for c in cands)
    if simplices:
        rep = verify_triangulation(pc, simplices, hull)
    else:
        hv = hull_volume(hull)
        rep = TriangulationReport(False, True, False, None, "full", Fraction(0), hv, "no candidate simplices")
    return GLBTResult(k, toric_g(L)[k], simplices, rep)
