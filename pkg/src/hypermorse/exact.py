"""Exact matrices over Z, Q, Z/p and canonical sub-module computations.

Matrices are immutable, entries are Python ints (Z and Z/p, stored as
canonical residues) or Fractions (Q); no floating point anywhere.  Canonical
bases make span-level statements testable as structural matrix equality:
column Hermite normal form over Z, reduced column echelon form over fields.
The integer elimination itself lives in the _kernel twins.
"""

from __future__ import annotations

from fractions import Fraction

from . import _kernel
from .coeffs import CoeffSpec


class ExactMatrix:
    """An immutable rows x cols matrix of exact scalars."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        data = tuple(tuple(r) for r in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("inconsistent matrix shape")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, data, cols=None):
        data = [list(r) for r in data]
        if data:
            cols = len(data[0])
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns, nrows):
        columns = [list(c) for c in columns]
        if any(len(c) != nrows for c in columns):
            raise ValueError("column length mismatch")
        data = [[c[i] for c in columns] for i in range(nrows)]
        return cls(nrows, len(columns), data)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    def row_lists(self):
        return [list(r) for r in self.data]

    def column(self, j):
        return tuple(r[j] for r in self.data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return ExactMatrix(
            self.cols, self.rows, [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def hstack(self, other):
        if other.rows != self.rows:
            raise ValueError("row count mismatch in hstack")
        return ExactMatrix(
            self.rows,
            self.cols + other.cols,
            [list(a) + list(b) for a, b in zip(self.data, other.data)],
        )

    def negate(self):
        return ExactMatrix(self.rows, self.cols, [[-x for x in r] for r in self.data])

    def is_zero(self):
        return all(not x for r in self.data for x in r)

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return "ExactMatrix(%dx%d)" % (self.rows, self.cols)


def normalize(m, coeff):
    return ExactMatrix(m.rows, m.cols, [[coeff.normalize(x) for x in r] for r in m.data])


def matmul(a, b, coeff):
    if a.cols != b.rows:
        raise ValueError("shape mismatch in matmul")
    bd = b.data
    out = []
    for i in range(a.rows):
        ar = a.data[i]
        row = []
        for j in range(b.cols):
            s = 0
            for k in range(a.cols):
                x = ar[k]
                if x:
                    y = bd[k][j]
                    if y:
                        s += x * y
            row.append(coeff.normalize(s))
        out.append(row)
    return ExactMatrix(a.rows, b.cols, out)


def matvec(a, vec, coeff):
    if a.cols != len(vec):
        raise ValueError("shape mismatch in matvec")
    out = []
    for i in range(a.rows):
        s = 0
        ar = a.data[i]
        for k in range(a.cols):
            x = ar[k]
            if x:
                y = vec[k]
                if y:
                    s += x * y
        out.append(coeff.normalize(s))
    return out


# ---------------------------------------------------------------------------
# field elimination (Q via Fractions, Z/p via canonical residues)


def _field_closures(coeff):
    if coeff.kind == "Q":
        def div(a, b):
            return Fraction(a, 1) / b if not isinstance(a, Fraction) else a / b

        def submul(a, q, b):
            return a - q * b

        return div, submul, lambda x: x
    p = coeff.p

    def div(a, b):
        return a * pow(b, p - 2, p) % p

    def submul(a, q, b):
        return (a - q * b) % p

    return div, submul, lambda x: x % p


def _rref_rows_with_transform(mat, coeff):
    """Reduced row echelon form over a field with transform u (u*mat = h).

    Returns (h, u, pivots) where pivots is a list of (row, col) pairs; h keeps
    zero rows so that u stays square and kernel rows can be read off.
    """
    div, submul, norm = _field_closures(coeff)
    m = len(mat)
    n = len(mat[0]) if m else 0
    rows = [[norm(x) for x in row] for row in mat]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            u[r], u[piv] = u[piv], u[r]
        a = rows[r][c]
        if a != 1:
            inv = div(1, a)
            rows[r] = [norm(x * inv) for x in rows[r]]
            u[r] = [norm(x * inv) for x in u[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                q = rows[i][c]
                rows[i] = [submul(x, q, y) for x, y in zip(rows[i], rows[r])]
                u[i] = [submul(x, q, y) for x, y in zip(u[i], u[r])]
        pivots.append((r, c))
        r += 1
    return rows, u, pivots


def _rref_rows(mat, coeff):
    h, _, pivots = _rref_rows_with_transform(mat, coeff)
    return h[: len(pivots)]


# ---------------------------------------------------------------------------
# canonical bases, kernels, solving


def canonical_basis(m, coeff):
    """Canonical basis of the column span: HNF over Z, RCEF over fields.

    Zero columns are dropped; equal spans yield identical matrices.
    """
    rows_t = m.transpose().row_lists()
    if coeff.kind == "Z":
        reduced = _kernel.hnf_rows(rows_t)
    else:
        reduced = _rref_rows(rows_t, coeff)
    return ExactMatrix.from_rows(reduced, cols=m.rows).transpose()


def hermite_basis(m):
    """Column Hermite normal form basis of an integer column lattice."""
    return canonical_basis(m, CoeffSpec("Z"))


def kernel_basis(m, coeff):
    """Canonical basis (columns) of {x : m*x = 0} over the given ring.

    Over Z this is a basis of the full kernel lattice (which is saturated).
    """
    rows_t = m.transpose().row_lists()
    if coeff.kind == "Z":
        h, u = _kernel.hnf_rows_with_transform(rows_t)
        rows = [u[i] for i in range(len(h)) if not any(h[i])]
        rows = _kernel.hnf_rows(rows)
    else:
        h, u, pivots = _rref_rows_with_transform(rows_t, coeff)
        rows = [u[i] for i in range(len(pivots), len(h))]
        rows = _rref_rows(rows, coeff)
    return ExactMatrix.from_rows(rows, cols=m.cols).transpose()


class ColumnSolver:
    """Prefactored exact solver for basis-expression problems basis*x = vec."""

    def __init__(self, basis, coeff):
        self.basis = basis
        self.coeff = coeff
        rows_t = basis.transpose().row_lists()
        if coeff.kind == "Z":
            h, u = _kernel.hnf_rows_with_transform(rows_t)
            pivots = []
            for i, row in enumerate(h):
                for j, x in enumerate(row):
                    if x:
                        pivots.append((i, j))
                        break
        else:
            h, u, pivots = _rref_rows_with_transform(rows_t, coeff)
        self._h = h
        self._u = u
        self._pivots = pivots

    def solve(self, vec):
        """Coefficients x with basis*x = vec, or None if vec is outside the span."""
        coeff = self.coeff
        if len(vec) != self.basis.rows:
            raise ValueError("vector length mismatch")
        res = [coeff.normalize(x) for x in vec]
        weights = {}
        if coeff.kind == "Z":
            for k, p in self._pivots:
                b = res[p]
                if b:
                    a = self._h[k][p]
                    if b % a:
                        return None
                    q = b // a
                    row = self._h[k]
                    for j in range(p, len(res)):
                        if row[j]:
                            res[j] -= q * row[j]
                    weights[k] = q
        else:
            div, submul, _ = _field_closures(coeff)
            for k, p in self._pivots:
                b = res[p]
                if b:
                    q = div(b, self._h[k][p])
                    row = self._h[k]
                    for j in range(p, len(res)):
                        if row[j]:
                            res[j] = submul(res[j], q, row[j])
                    weights[k] = q
        if any(res):
            return None
        n = self.basis.cols
        out = [0] * n
        for k, q in weights.items():
            urow = self._u[k]
            for i in range(n):
                if urow[i]:
                    out[i] += q * urow[i]
        return [coeff.normalize(x) for x in out]

    def contains(self, vec):
        return self.solve(vec) is not None


def solve_columns(m, vec, coeff):
    """One-shot basis expression; prefer ColumnSolver for repeated solves."""
    return ColumnSolver(m, coeff).solve(vec)


def rank(m, coeff):
    if coeff.kind == "Z":
        return len(_rref_rows(m.row_lists(), CoeffSpec("Q")))
    return len(_rref_rows(m.row_lists(), coeff))


def snf(m):
    """Smith normal form over Z: (u, d, v) with m = u*d*v, u and v unimodular,
    d diagonal with a non-negative divisibility chain."""
    if m.rows == 0 or m.cols == 0:
        return (
            ExactMatrix.identity(m.rows),
            ExactMatrix.zeros(m.rows, m.cols),
            ExactMatrix.identity(m.cols),
        )
    u, d, v = _kernel.snf_decompose(m.row_lists())
    return (
        ExactMatrix.from_rows(u, cols=m.rows),
        ExactMatrix.from_rows(d, cols=m.cols),
        ExactMatrix.from_rows(v, cols=m.cols),
    )


def snf_diagonal(m):
    """The non-zero diagonal entries of the Smith normal form."""
    if m.rows == 0 or m.cols == 0:
        return []
    _, d, _ = _kernel.snf_decompose(m.row_lists())
    out = []
    for t in range(min(m.rows, m.cols)):
        if d[t][t]:
            out.append(d[t][t])
    return out


# ---------------------------------------------------------------------------
# module-level operations (sums, intersections, preimages of spans)


def module_sum(a, b, coeff):
    """Canonical basis of span(a) + span(b) in a common ambient."""
    if a.rows != b.rows:
        raise ValueError("ambient dimension mismatch")
    return canonical_basis(a.hstack(b), coeff)


def module_intersection(a, b, coeff):
    """Canonical basis of span(a) ∩ span(b) via the kernel of [a | -b]."""
    if a.rows != b.rows:
        raise ValueError("ambient dimension mismatch")
    if a.cols == 0 or b.cols == 0:
        return ExactMatrix.zeros(a.rows, 0)
    block = a.hstack(b.negate())
    ker = kernel_basis(block, coeff)
    xpart = ExactMatrix(a.cols, ker.cols, ker.data[: a.cols])
    return canonical_basis(matmul(a, xpart, coeff), coeff)


def preimage_module(map_matrix, target_basis, coeff):
    """Canonical basis of {x : map_matrix*x ∈ span(target_basis)}."""
    if map_matrix.rows != target_basis.rows:
        raise ValueError("codomain dimension mismatch")
    s = map_matrix.cols
    if s == 0:
        return ExactMatrix.zeros(0, 0)
    if target_basis.cols == 0:
        return kernel_basis(map_matrix, coeff)
    block = map_matrix.hstack(target_basis.negate())
    ker = kernel_basis(block, coeff)
    xpart = ExactMatrix(s, ker.cols, ker.data[:s])
    return canonical_basis(xpart, coeff)


def det_int(m):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.row_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            piv = next((i for i in range(k + 1, n) if a[i][k]), -1)
            if piv < 0:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def unit_column(n, i):
    return [1 if k == i else 0 for k in range(n)]
