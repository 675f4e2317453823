"""Exact dense linear algebra over Z and Q.

Arbitrary-precision integer and rational matrices with rank, kernel,
inverse and Smith normal form.  There is no floating point anywhere in
this module: integer work uses Python ints, rational work uses
fractions.Fraction.  Rank computations route through fraction-free
(Bareiss) elimination so that coefficient growth stays polynomial even
on the wide, thin matrices the cohomology layer produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


class MatZ:
    """Dense integer matrix, row-major entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = list(entries)
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if not isinstance(e, int):
                raise TypeError(f"MatZ entry {e!r} is not an int")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        flat = []
        for row in rows_list:
            if len(row) != cols:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(rows, cols, flat)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    def get(self, i, j):
        return self.entries[i * self.cols + j]

    def to_rows(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def is_zero(self):
        return not any(self.entries)

    def is_identity(self):
        return self.rows == self.cols and all(
            self.get(i, j) == (1 if i == j else 0)
            for i in range(self.rows) for j in range(self.cols))

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum(self.get(i, i) for i in range(self.rows))

    def transpose(self):
        return MatZ(self.cols, self.rows,
                    [self.get(i, j) for j in range(self.cols) for i in range(self.rows)])

    def add(self, other):
        self._check_same_shape(other)
        return MatZ(self.rows, self.cols,
                    [a + b for a, b in zip(self.entries, other.entries)])

    def sub(self, other):
        self._check_same_shape(other)
        return MatZ(self.rows, self.cols,
                    [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c):
        if not isinstance(c, int):
            raise TypeError("MatZ scale factor must be an int")
        return MatZ(self.rows, self.cols, [c * a for a in self.entries])

    def neg(self):
        return self.scale(-1)

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [0] * (n * m)
        for i in range(n):
            ai = i * k
            oi = i * m
            for t in range(k):
                v = a[ai + t]
                if v:
                    bt = t * m
                    for j in range(m):
                        out[oi + j] += v * b[bt + j]
        return MatZ(n, m, out)

    def to_rat(self):
        return MatQ(self.rows, self.cols, [Fraction(e) for e in self.entries])

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        return (isinstance(other, MatZ) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"MatZ({self.rows}x{self.cols}, {list(self.entries)})"


class MatQ:
    """Dense rational matrix; entries are Fractions (always in lowest terms)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = [Fraction(e) for e in entries]
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        flat = []
        for row in rows_list:
            if len(row) != cols:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(rows, cols, flat)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(1) if i == j else Fraction(0)
                          for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    def get(self, i, j):
        return self.entries[i * self.cols + j]

    def to_rows(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def is_zero(self):
        return not any(self.entries)

    def is_identity(self):
        return self.rows == self.cols and all(
            self.get(i, j) == (1 if i == j else 0)
            for i in range(self.rows) for j in range(self.cols))

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((self.get(i, i) for i in range(self.rows)), Fraction(0))

    def add(self, other):
        self._check_same_shape(other)
        return MatQ(self.rows, self.cols,
                    [a + b for a, b in zip(self.entries, other.entries)])

    def sub(self, other):
        self._check_same_shape(other)
        return MatQ(self.rows, self.cols,
                    [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c):
        c = Fraction(c)
        return MatQ(self.rows, self.cols, [c * a for a in self.entries])

    def neg(self):
        return self.scale(-1)

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [Fraction(0)] * (n * m)
        for i in range(n):
            ai = i * k
            oi = i * m
            for t in range(k):
                v = a[ai + t]
                if v:
                    bt = t * m
                    for j in range(m):
                        out[oi + j] += v * b[bt + j]
        return MatQ(n, m, out)

    def is_integral(self):
        return all(e.denominator == 1 for e in self.entries)

    def to_int(self):
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return MatZ(self.rows, self.cols, [int(e) for e in self.entries])

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        return (isinstance(other, MatQ) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"MatQ({self.rows}x{self.cols}, {[str(e) for e in self.entries]})"


@dataclass(frozen=True)
class SnfResult:
    """Elementary divisors d (with d[k] | d[k+1]) and the rank of the matrix."""

    d: tuple
    rank: int


def rank_int_rows(rows):
    """Rank of an integer matrix given as a list of rows (fraction-free Bareiss).

    Pivots are chosen as the smallest-magnitude nonzero entry of the current
    column, ties broken by row order.  Every division below is exact by
    Sylvester's determinant identity, so all intermediate values stay integers.
    """
    m = [list(r) for r in rows]
    nr = len(m)
    if nr == 0:
        return 0
    nc = len(m[0])
    if nc == 0:
        return 0
    prev = 1
    pr = 0
    for pc in range(nc):
        if pr >= nr:
            break
        best = -1
        bestv = 0
        for i in range(pr, nr):
            v = m[i][pc]
            if v and (best < 0 or abs(v) < abs(bestv)):
                best, bestv = i, v
        if best < 0:
            continue
        if best != pr:
            m[pr], m[best] = m[best], m[pr]
        piv = m[pr][pc]
        prow = m[pr]
        for i in range(pr + 1, nr):
            row = m[i]
            f = row[pc]
            if f:
                for j in range(pc + 1, nc):
                    row[j] = (piv * row[j] - f * prow[j]) // prev
                row[pc] = 0
            elif piv != prev:
                for j in range(pc + 1, nc):
                    row[j] = (piv * row[j]) // prev
        prev = piv
        pr += 1
    return pr


def _cleared_rows(m: MatQ):
    """Rows of m rescaled to integers (each row times the lcm of its denominators)."""
    out = []
    for row in m.to_rows():
        den = 1
        for e in row:
            den = lcm(den, e.denominator)
        out.append([int(e * den) for e in row])
    return out


def rank_q(m: MatQ) -> int:
    """Dimension of the row space of m."""
    return rank_int_rows(_cleared_rows(m))


def kernel_q(m: MatQ):
    """Basis of the null space of m, as a list of cols x 1 MatQ column vectors.

    Computed by reduced row echelon form; the basis vector for each free
    column has a 1 in that coordinate.
    """
    nr, nc = m.rows, m.cols
    rows = m.to_rows()
    pivots = []
    pr = 0
    for pc in range(nc):
        if pr >= nr:
            break
        hit = -1
        for i in range(pr, nr):
            if rows[i][pc]:
                hit = i
                break
        if hit < 0:
            continue
        rows[pr], rows[hit] = rows[hit], rows[pr]
        inv = 1 / rows[pr][pc]
        rows[pr] = [v * inv for v in rows[pr]]
        for i in range(nr):
            if i != pr and rows[i][pc]:
                f = rows[i][pc]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
        pivots.append(pc)
        pr += 1
    pivot_set = set(pivots)
    basis = []
    for fc in range(nc):
        if fc in pivot_set:
            continue
        v = [Fraction(0)] * nc
        v[fc] = Fraction(1)
        for r_i, pc in enumerate(pivots):
            v[pc] = -rows[r_i][fc]
        basis.append(MatQ(nc, 1, v))
    return basis


def inv_q(m: MatQ) -> MatQ:
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    rows = [r + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i, r in enumerate(m.to_rows())]
    for pc in range(n):
        hit = -1
        for i in range(pc, n):
            if rows[i][pc]:
                hit = i
                break
        if hit < 0:
            raise ValueError("matrix is singular")
        rows[pc], rows[hit] = rows[hit], rows[pc]
        inv = 1 / rows[pc][pc]
        rows[pc] = [v * inv for v in rows[pc]]
        for i in range(n):
            if i != pc and rows[i][pc]:
                f = rows[i][pc]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pc])]
    return MatQ.from_rows([r[n:] for r in rows])


def inv_z(m: MatZ) -> MatZ:
    """Inverse of an integer matrix that is invertible over Z (det = +/-1)."""
    inv = inv_q(m.to_rat())
    if not inv.is_integral():
        raise ValueError("matrix is not invertible over Z (determinant not +/-1)")
    return inv.to_int()


def snf(m: MatZ) -> SnfResult:
    """Smith normal form elementary divisors of an integer matrix.

    Local pivoting strategy: bring the smallest-magnitude nonzero entry of
    the remaining submatrix (ties by row then column) to the corner, clear
    its row and column by Euclidean steps, and pull in any row whose entries
    the pivot does not yet divide.  The pivot magnitude strictly decreases on
    every retry, so each corner terminates, and the divisibility sweep makes
    the chain d[k] | d[k+1] hold by construction.
    """
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    k = min(nr, nc)
    divs = []
    t = 0
    while t < k:
        pi = pj = -1
        bestv = 0
        for i in range(t, nr):
            for j in range(t, nc):
                v = a[i][j]
                if v and (pi < 0 or abs(v) < abs(bestv)):
                    pi, pj, bestv = i, j, v
        if pi < 0:
            break
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            if a[t][t] < 0:
                a[t] = [-v for v in a[t]]
            piv = a[t][t]
            moved = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // piv
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // piv
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        moved = True
                        break
            if moved:
                continue
            bad = -1
            for i in range(t + 1, nr):
                if any(a[i][j] % piv for j in range(t + 1, nc)):
                    bad = i
                    break
            if bad < 0:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        divs.append(a[t][t])
        t += 1
    d = tuple(divs + [0] * (k - len(divs)))
    return SnfResult(d, len(divs))


# --- JSON wire format -------------------------------------------------------
#
# Matrices travel as {rows, cols, entries} with entries rendered as decimal
# strings ("n" for integers, "p/q" for rationals) so that transport never
# clips arbitrary-precision values to 64 bits.

def mat_z_to_json(m: MatZ) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [str(e) for e in m.entries]}


def mat_z_from_json(obj) -> MatZ:
    return MatZ(obj["rows"], obj["cols"], [int(s) for s in obj["entries"]])


def mat_q_to_json(m: MatQ) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [str(e) for e in m.entries]}


def mat_q_from_json(obj) -> MatQ:
    return MatQ(obj["rows"], obj["cols"], [Fraction(s) for s in obj["entries"]])
