"""Face lattices, polytopal/simplicial complexes and combinatorial constructions.

Vertices are always the integers ``0..n-1``; human-readable names live in the
``labels`` tuple. A face is identified with its vertex set (a ``frozenset``),
which is sound for polytopes and their subdivisions because every face is
determined by its vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

Face = frozenset[int]
EMPTY: Face = frozenset()


class LatticeError(ValueError):
    """Raised when a face family violates the face-lattice axioms."""


class UnknownVertexError(KeyError):
    pass


def face_key(f: Iterable[int]) -> tuple[int, ...]:
    """Canonical sorted encoding of a vertex set."""
    return tuple(sorted(f))


def _sort_faces(faces: Iterable[Face]) -> list[Face]:
    return sorted(faces, key=lambda f: (len(f), face_key(f)))


@dataclass(frozen=True)
class FaceLattice:
    """Graded poset of all faces of a ``dim``-polytope, empty face and polytope included."""

    dim: int
    labels: tuple[str, ...]
    faces: Mapping[Face, int]

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def vertex_set(self) -> Face:
        return frozenset(range(self.n_vertices))

    @property
    def top(self) -> Face:
        return self.vertex_set

    def faces_of_dim(self, j: int) -> list[Face]:
        return _sort_faces(f for f, dj in self.faces.items() if dj == j)

    def proper_faces(self) -> dict[Face, int]:
        top = self.top
        return {f: dj for f, dj in self.faces.items() if f != top}

    def facets(self) -> list[Face]:
        return self.faces_of_dim(self.dim - 1)

    def is_face(self, vs: Iterable[int]) -> bool:
        return frozenset(vs) in self.faces

    def is_simplex_face(self, f: Face) -> bool:
        return f in self.faces and len(f) == self.faces[f] + 1

    def is_simplicial(self) -> bool:
        """True when every proper face is a simplex."""
        top = self.top
        return all(len(f) == dj + 1 for f, dj in self.faces.items() if f != top)

    def index(self, label: str | int) -> int:
        if isinstance(label, int) and not isinstance(label, bool):
            if 0 <= label < self.n_vertices:
                return label
            raise UnknownVertexError(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownVertexError(label) from None

    def vertex_indices(self, labels: Iterable[str | int]) -> Face:
        return frozenset(self.index(x) for x in labels)

    def boundary(self) -> "PolyComplex":
        """The boundary complex (all proper faces)."""
        return PolyComplex(self.proper_faces(), self.labels)

    def subfaces(self, f: Face) -> list[Face]:
        """All faces strictly below ``f``, empty face included."""
        return [g for g in self.faces if g < f]

    def interval(self, f: Face) -> "FaceLattice":
        """The face lattice of the face ``f`` itself, relabelled to ``0..|f|-1``."""
        verts = sorted(f)
        pos = {v: i for i, v in enumerate(verts)}
        faces = {frozenset(pos[v] for v in g): self.faces[g] for g in self.faces if g <= f}
        return FaceLattice(self.faces[f], tuple(self.labels[v] for v in verts), faces)

    def f_vector(self) -> list[int]:
        counts = [0] * self.dim
        top = self.top
        for f, dj in self.faces.items():
            if f != top and dj >= 0:
                counts[dj] += 1
        return counts

    def fingerprint(self) -> str:
        """Stable text fingerprint of the labelled lattice."""
        parts = [f"{self.faces[f]}:{','.join(map(str, face_key(f)))}" for f in _sort_faces(self.faces)]
        return f"d={self.dim};n={self.n_vertices};" + ";".join(parts)

    # -- construction --------------------------------------------------

    @classmethod
    def from_facets(
        cls,
        dim: int,
        facets: Iterable[Iterable[int]],
        labels: Iterable[str] | None = None,
        validate: bool = True,
    ) -> "FaceLattice":
        """Build the lattice from facet vertex sets.

        Faces of a face ``F`` are the maximal proper sets of the form
        ``F & G`` with ``G`` a facet; this is applied top-down.
        """
        facets = [frozenset(f) for f in facets]
        n = 1 + max((max(f) for f in facets if f), default=-1)
        labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(labels) < n:
            raise LatticeError("facet refers to a vertex without a label")
        n = len(labels)
        top = frozenset(range(n))
        faces: dict[Face, int] = {top: dim}
        if dim == 0:
            faces[EMPTY] = -1
            lat = cls(dim, labels, faces)
            if validate:
                lat.validate()
            return lat
        if len(set(facets)) != len(facets):
            raise LatticeError("duplicate facet")
        for f in facets:
            faces[f] = dim - 1
        if dim >= 1 and all(len(f) == dim for f in facets):
            # simplicial: every subset of a facet is a face
            for f in facets:
                for r in range(dim):
                    for sub in combinations(sorted(f), r):
                        faces[frozenset(sub)] = r - 1
        else:
            inc: dict[int, list[Face]] = {}
            for f in facets:
                for v in f:
                    inc.setdefault(v, []).append(f)
            level = list(dict.fromkeys(facets))
            j = dim - 1
            while j > 0:
                nxt: dict[Face, None] = {}
                for f in level:
                    cands = set()
                    for v in f:
                        for g in inc[v]:
                            if g != f:
                                x = f & g
                                if x != f:
                                    cands.add(x)
                    maximal = [x for x in cands if not any(x < y for y in cands)]
                    for x in maximal:
                        old = faces.get(x)
                        if old is not None and old != j - 1:
                            raise LatticeError(f"face {face_key(x)} reached in dimensions {old} and {j - 1}")
                        faces[x] = j - 1
                        nxt[x] = None
                level = list(nxt)
                j -= 1
            faces[EMPTY] = -1
        lat = cls(dim, labels, faces)
        if validate:
            lat.validate()
        return lat

    def validate(self) -> None:
        """Check grading, vertex counts and intersection closure; raise LatticeError."""
        d = self.dim
        top = self.top
        if self.faces.get(top) != d:
            raise LatticeError("top face missing or misgraded")
        if self.faces.get(EMPTY) != -1:
            raise LatticeError("empty face missing")
        for v in range(self.n_vertices):
            if self.faces.get(frozenset([v])) != 0:
                raise LatticeError(f"vertex {self.labels[v]} is not a 0-face")
        for f, dj in self.faces.items():
            if len(f) < dj + 1:
                raise LatticeError(f"face {face_key(f)} of dim {dj} has too few vertices")
            if dj <= 1 and len(f) != dj + 1:
                raise LatticeError(f"face {face_key(f)} of dim {dj} must be a simplex")
        # graded: every face of dim j >= 1 has at least j+1 faces of dim j-1 below it,
        # and nothing of dim >= j strictly below it
        by_dim_vertex: dict[tuple[int, int], list[Face]] = {}
        for f, dj in self.faces.items():
            for v in f:
                by_dim_vertex.setdefault((dj, v), []).append(f)
        for f, dj in self.faces.items():
            if dj < 1 or f == top:
                continue
            below = set()
            for v in f:
                for g in by_dim_vertex.get((dj - 1, v), ()):
                    if g < f:
                        below.add(g)
                for e in range(dj, d):
                    for g in by_dim_vertex.get((e, v), ()):
                        if g < f:
                            raise LatticeError("containment does not respect dimension")
            if len(below) < dj + 1:
                raise LatticeError(f"face {face_key(f)} has too few subfaces")
        facets = [f for f, dj in self.faces.items() if dj == d - 1]
        for a in facets:
            seen = set()
            for v in a:
                for b in by_dim_vertex.get((d - 1, v), ()):
                    if b is a or b in seen:
                        continue
                    seen.add(b)
                    if (a & b) not in self.faces:
                        raise LatticeError("intersection of two facets is not a face")
        if d >= 2:
            # diamond property at the top: each ridge lies in exactly two facets
            for r, dj in self.faces.items():
                if dj == d - 2:
                    v = next(iter(r))
                    up = sum(1 for b in by_dim_vertex.get((d - 1, v), ()) if r < b)
                    if up != 2:
                        raise LatticeError(f"ridge {face_key(r)} lies in {up} facets, expected 2")


@dataclass(frozen=True)
class PolyComplex:
    """A polytopal complex: face vertex sets with dimensions, closed under subfaces.

    ``provenance`` is set on barycentric subdivisions: it maps each vertex to
    the face of the subdivided complex whose barycenter it is.
    """

    faces: Mapping[Face, int]
    labels: tuple[str, ...] = ()
    provenance: tuple[Face, ...] | None = field(default=None, compare=False)

    @classmethod
    def simplicial(cls, simplices: Iterable[Iterable[int]], labels: Iterable[str] | None = None) -> "PolyComplex":
        """Simplicial complex generated by ``simplices`` (all subsets added)."""
        faces: dict[Face, int] = {EMPTY: -1}
        for s in simplices:
            s = face_key(s)
            if frozenset(s) in faces:
                continue
            for r in range(1, len(s) + 1):
                for sub in combinations(s, r):
                    faces.setdefault(frozenset(sub), r - 1)
        if labels is None:
            n = 1 + max((v for f in faces for v in f), default=-1)
            labels = tuple(str(i) for i in range(n))
        return cls(faces, tuple(labels))

    @property
    def dim(self) -> int:
        return max(self.faces.values(), default=-1)

    @property
    def vertices(self) -> Face:
        return frozenset(v for f in self.faces if len(f) == 1 for v in f)

    @property
    def is_simplicial(self) -> bool:
        return all(len(f) == dj + 1 for f, dj in self.faces.items())

    def faces_of_dim(self, j: int) -> list[Face]:
        return _sort_faces(f for f, dj in self.faces.items() if dj == j)

    def f_vector(self) -> list[int]:
        counts = [0] * (self.dim + 1)
        for dj in self.faces.values():
            if dj >= 0:
                counts[dj] += 1
        return counts

    def euler_characteristic(self) -> int:
        return sum((-1) ** dj for dj in self.faces.values() if dj >= 0)

    def maximal_faces(self) -> list[Face]:
        return list(self._maximal)

    @cached_property
    def _maximal(self) -> tuple[Face, ...]:
        covered: set[Face] = set()
        if self.is_simplicial:
            for f in self.faces:
                for v in f:
                    covered.add(f - {v})
        else:
            by_vertex: dict[int, list[Face]] = {}
            for g in self.faces:
                for v in g:
                    by_vertex.setdefault(v, []).append(g)
            if len(self.faces) > 1:
                covered.add(EMPTY)
            for f in self.faces:
                if not f:
                    continue
                v = min(f)
                if any(len(g) > len(f) and f < g for g in by_vertex[v]):
                    covered.add(f)
        return tuple(_sort_faces(f for f in self.faces if f not in covered))

    @cached_property
    def _maximal_by_vertex(self) -> dict[int, list[Face]]:
        out: dict[int, list[Face]] = {}
        for f in self._maximal:
            for v in f:
                out.setdefault(v, []).append(f)
        return out

    def __contains__(self, f: Iterable[int]) -> bool:
        return frozenset(f) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def face_set(self) -> frozenset[Face]:
        return frozenset(self.faces)

    def is_subcomplex_of(self, other: "PolyComplex") -> bool:
        return all(f in other.faces for f in self.faces)

    def is_closed(self) -> bool:
        """Closed under subfaces (checked through faces of dimension one lower)."""
        faces = self.faces
        if self.faces and EMPTY not in faces:
            return False
        if self.is_simplicial:
            return all(f - {v} in faces for f in faces for v in f)
        for f, dj in faces.items():
            if dj >= 0 and not any(g < f and faces[g] == dj - 1 for g in faces):
                return False
        return True

    def induced(self, vs: Iterable[int]) -> "PolyComplex":
        """Full subcomplex on the vertex set ``vs``."""
        vs = frozenset(vs)
        return PolyComplex({f: dj for f, dj in self.faces.items() if f <= vs}, self.labels, self.provenance)

    def restrict(self, faces: Iterable[Face]) -> "PolyComplex":
        fs = set(faces)
        return PolyComplex({f: dj for f, dj in self.faces.items() if f in fs}, self.labels, self.provenance)

    def link(self, f: Face) -> "PolyComplex":
        """Link of a face in a simplicial complex."""
        faces = {g - f: dj - len(f) for g, dj in self.faces.items() if f <= g}
        return PolyComplex(faces, self.labels)


# -- operations -------------------------------------------------------------


def skeleton(x: FaceLattice | PolyComplex, j: int) -> PolyComplex:
    d = x.dim
    if j < -1 or (isinstance(x, FaceLattice) and j > d):
        raise ValueError(f"skeleton dimension {j} outside [-1, {d}]")
    return PolyComplex({f: dj for f, dj in x.faces.items() if dj <= j}, x.labels, getattr(x, "provenance", None))


def is_k_simplicial(L: FaceLattice, k: int) -> bool:
    if not 0 <= k <= L.dim - 1:
        raise ValueError(f"k={k} outside [0, {L.dim - 1}]")
    return all(len(f) == dj + 1 for f, dj in L.faces.items() if dj <= k)


def induced_subcomplex(L: FaceLattice, W: Iterable[str | int]) -> PolyComplex:
    """``P_W``: proper faces whose vertex set lies in ``W``."""
    w = L.vertex_indices(W)
    top = L.top
    return PolyComplex({f: dj for f, dj in L.faces.items() if f <= w and f != top}, L.labels)


def complement_closure(L: FaceLattice, W: Iterable[str | int]) -> PolyComplex:
    """Closure of the boundary minus ``P_{V-W}``: union of closed proper faces meeting ``W``."""
    w = L.vertex_indices(W)
    top = L.top
    meeting = [f for f in L.faces if f != top and f & w]
    keep = {EMPTY: -1} if meeting else {}
    for f, dj in L.faces.items():
        if f == top or f in keep:
            continue
        if f & w or any(f <= g for g in meeting):
            keep[f] = dj
    if not keep and EMPTY in L.faces:
        keep[EMPTY] = -1
    return PolyComplex(keep, L.labels)


def missing_simplices(L: FaceLattice, j: int) -> list[tuple[int, ...]]:
    """``(j+1)``-vertex sets whose proper subsets are all faces but which are not faces."""
    if not 1 <= j <= L.dim - 1:
        raise ValueError(f"j={j} outside [1, {L.dim - 1}]")
    faces = L.faces
    # (j-1)-dimensional simplex faces
    base = [f for f in L.faces_of_dim(j - 1) if len(f) == j]
    out = []
    n = L.n_vertices
    for tau in base:
        m = max(tau)
        for v in range(m + 1, n):
            sigma = tau | {v}
            if sigma in faces:
                continue
            ok = True
            for u in tau:
                sub = sigma - {u}
                if faces.get(sub) != j - 1 or len(sub) != j:
                    ok = False
                    break
            if ok:
                out.append(face_key(sigma))
    return sorted(out)


def closed_star(C: PolyComplex, v: int) -> PolyComplex:
    if frozenset([v]) not in C.faces:
        raise UnknownVertexError(v)
    return closed_neighborhood(C, [v])


def closed_neighborhood(C: PolyComplex, W: Iterable[int]) -> PolyComplex:
    """All faces contained in a face that contains a vertex of ``W``."""
    w = frozenset(W)
    for v in w:
        if frozenset([v]) not in C.faces:
            raise UnknownVertexError(v)
    if not w:
        return PolyComplex({EMPTY: -1}, C.labels, C.provenance)
    index = C._maximal_by_vertex
    top_faces = list({f: None for v in sorted(w) for f in index.get(v, ())})
    if C.is_simplicial:
        faces: dict[Face, int] = {EMPTY: -1}
        for f in top_faces:
            s = face_key(f)
            for r in range(1, len(s) + 1):
                for sub in combinations(s, r):
                    faces[frozenset(sub)] = r - 1
        return PolyComplex(faces, C.labels, C.provenance)
    keep = {f: dj for f, dj in C.faces.items() if any(f <= g for g in top_faces)}
    return PolyComplex(keep, C.labels, C.provenance)


def barycentric_subdivision(C: PolyComplex | FaceLattice, times: int = 1) -> PolyComplex:
    """Iterated order complex of the nonempty faces.

    Vertices of the result are numbered in the canonical order of the faces
    they subdivide; ``provenance[i]`` is that face (of the input to the last
    round). Use :func:`provenance_chain` to trace back through several rounds.
    """
    if times < 1:
        raise ValueError("times must be >= 1")
    if isinstance(C, FaceLattice):
        C = C.boundary()
    cur = C
    for _ in range(times):
        cur = _subdivide_once(cur)
    return cur


def _subdivide_once(C: PolyComplex) -> PolyComplex:
    nonempty = [f for f in _sort_faces(C.faces) if f]
    idx = {f: i for i, f in enumerate(nonempty)}
    names = C.labels
    labels = tuple(
        "{" + ",".join(names[v] if v < len(names) else str(v) for v in face_key(f)) + "}" for f in nonempty
    )
    simplicial = C.is_simplicial
    faces: dict[Face, int] = {EMPTY: -1}
    cache: dict[Face, list[tuple[int, ...]]] = {}

    def strictly_below(f: Face) -> list[Face]:
        if simplicial:
            s = face_key(f)
            return [frozenset(sub) for r in range(1, len(s)) for sub in combinations(s, r)]
        return [g for g in nonempty if g < f]

    def chains_from(f: Face) -> list[tuple[int, ...]]:
        # every chain of nonempty faces whose maximum is f
        r = cache.get(f)
        if r is None:
            r = [(idx[f],)]
            for g in strictly_below(f):
                r.extend((idx[f],) + ch for ch in chains_from(g))
            cache[f] = r
        return r

    for f in nonempty:
        for ch in chains_from(f):
            faces[frozenset(ch)] = len(ch) - 1
    return PolyComplex(faces, labels, tuple(nonempty))


def provenance_chain(sd: PolyComplex, vertex: int, levels: list[PolyComplex]) -> Face:
    """Trace a vertex of an iterated subdivision back to the original vertex set it spans.

    ``levels`` lists the intermediate subdivisions from the original complex's
    first subdivision up to (excluding) ``sd``.
    """
    f = sd.provenance[vertex]
    for lvl in reversed(levels):
        f = frozenset(v for u in f for v in lvl.provenance[u])
    return f


def subdivided_subcomplex(sd: PolyComplex, sub: PolyComplex) -> PolyComplex:
    """The subdivision of ``sub`` inside ``sd`` (a subdivision of a complex containing ``sub``)."""
    keep = frozenset(i for i, f in enumerate(sd.provenance) if f in sub.faces)
    return sd.induced(keep)


def glbt_candidate_simplices(L: FaceLattice, k: int, check: bool = True) -> list[tuple[int, ...]]:
    """``(d+1)``-vertex sets all of whose subsets of size at most ``k`` are faces."""
    d = L.dim
    if check:
        if not 1 <= k <= d / 2:
            raise ValueError(f"k={k} must satisfy 1 <= k <= d/2 = {d / 2}")
        if not is_k_simplicial(L, 2 * k - 1):
            raise ValueError(f"lattice is not {2 * k - 1}-simplicial")
    faces = L.faces
    n = L.n_vertices
    size = d + 1
    out: list[tuple[int, ...]] = []

    def extend(cur: list[int], start: int) -> None:
        if len(cur) == size:
            out.append(tuple(cur))
            return
        for v in range(start, n - (size - len(cur)) + 1):
            ok = True
            for r in range(1, min(k, len(cur) + 1)):
                for sub in combinations(cur, r):
                    if frozenset(sub + (v,)) not in faces:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                cur.append(v)
                extend(cur, v + 1)
                cur.pop()

    extend([], 0)
    return out


def pyramid_lattice(L: FaceLattice, apex_label: str = "apex") -> FaceLattice:
    """Combinatorial pyramid: faces ``F`` and ``F + apex`` (plus the old top as a facet)."""
    n = L.n_vertices
    apex = n
    faces: dict[Face, int] = {}
    for f, dj in L.faces.items():
        faces[f] = dj
        faces[f | {apex}] = dj + 1
    return FaceLattice(L.dim + 1, L.labels + (apex_label,), faces)
