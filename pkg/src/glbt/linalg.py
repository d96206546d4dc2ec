"""Exact rank computations over the rationals.

Matrices are given as lists of sparse integer rows (``dict`` column -> int).
Rows with rational entries should be scaled to integers first, see
:func:`integer_row`. Elimination is fraction-free: each new row is reduced
against the current pivot rows by integer cross-multiplication and then
divided by the gcd of its entries, which keeps entries small for the 0/±1
boundary matrices that dominate the workload.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

SparseRow = dict[int, int]


def integer_row(row: Mapping[int, Fraction | int]) -> SparseRow:
    """Scale a rational sparse row to a primitive integer row with the same span."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    for k, v in row.items():
        if v:
            out[k] = int(v * den)
    return _primitive(out)


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


class Echelon:
    """Incrementally maintained row echelon form.

    ``add`` returns True when the row was independent of the rows added so
    far. ``rank`` is the number of independent rows seen.
    """

    __slots__ = ("pivots",)

    def __init__(self) -> None:
        self.pivots: dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, int]) -> SparseRow:
        """Return ``row`` reduced against the pivots (an empty dict if dependent)."""
        row = {k: v for k, v in row.items() if v}
        pivots = self.pivots
        while row:
            # leading column = smallest column index
            c = min(row)
            p = pivots.get(c)
            if p is None:
                return row
            a = row[c]
            b = p[c]
            g = gcd(a, b)
            ma, mb = b // g, a // g
            if ma != 1:
                if ma == -1:
                    row = {k: -v for k, v in row.items()}
                else:
                    row = {k: v * ma for k, v in row.items()}
            for k, v in p.items():
                nv = row.get(k, 0) - v * mb
                if nv:
                    row[k] = nv
                else:
                    del row[k]
            row = _primitive(row)
        return row

    def add(self, row: Mapping[int, int]) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def contains(self, row: Mapping[int, int]) -> bool:
        return not self.reduce(row)

    def copy(self) -> "Echelon":
        e = Echelon()
        e.pivots = dict(self.pivots)
        return e


def rank(rows: Iterable[Mapping[int, int]]) -> int:
    """Exact rank of a sparse integer matrix given by its rows."""
    rows = [r for r in rows if r]
    # sparse rows first keeps fill-in down
    rows.sort(key=len)
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def rank_rational(rows: Iterable[Mapping[int, Fraction | int]]) -> int:
    return rank(integer_row(r) for r in rows)


def dense_rank(matrix: list[list[Fraction | int]]) -> int:
    """Rank of a dense rational matrix (small matrices, e.g. affine ranks)."""
    return rank_rational({j: v for j, v in enumerate(row) if v} for row in matrix)


def determinant(matrix: list[list[int]]) -> int:
    """Bareiss determinant of a square integer matrix."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(r) for r in matrix]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[i][i]
        for r in range(i + 1, n):
            mri = m[r][i]
            row_r = m[r]
            row_i = m[i]
            for c in range(i + 1, n):
                row_r[c] = (row_r[c] * piv - mri * row_i[c]) // prev
            row_r[i] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def nullspace_vector(rows: list[list[int]]) -> list[int] | None:
    """A primitive integer vector spanning the kernel of a corank-1 integer matrix.

    ``rows`` has ``n-1`` rows of length ``n``; the kernel vector is given by
    signed maximal minors. Returns None if the rows are dependent.
    """
    n = len(rows[0]) if rows else 1
    vec = []
    for j in range(n):
        minor = [[r[c] for c in range(n) if c != j] for r in rows]
        vec.append((-1) ** j * determinant(minor))
    if not any(vec):
        return None
    g = 0
    for v in vec:
        g = gcd(g, v)
    return [v // g for v in vec]


def kernel_basis(matrix: list[list[Fraction | int]], ncols: int) -> list[list[Fraction]]:
    """Rational kernel basis of a small dense matrix via reduced row echelon form."""
    m = [[Fraction(x) for x in row] for row in matrix]
    pivcols: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivcols.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivcols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivcols):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis
