"""Exact matrices over a field: echelon forms, kernels, determinants,
characteristic polynomials.

Elimination over a field uses ordinary Gauss-Jordan steps with exact
division.  Integer determinants use Bareiss fraction-free elimination, and
characteristic polynomials use the Berkowitz scheme, which is division-free
and keeps every intermediate value an integer.
"""

from fractions import Fraction
from math import lcm

from .fields import QQ, normalize_int_vector
from .roots import IntPolynomial


class Matrix:
    __slots__ = ("data", "rows", "cols", "field")

    def __init__(self, rows, field=QQ):
        data = tuple(tuple(field.of(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix needs at least one row and one column")
        if any(len(r) != len(data[0]) for r in data):
            raise ValueError("ragged rows")
        self.data = data
        self.rows = len(data)
        self.cols = len(data[0])
        self.field = field

    @classmethod
    def identity(cls, n, field=QQ):
        one, zero = field.one, field.zero
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)],
                   field)

    def row(self, i):
        return self.data[i]

    def col(self, j):
        return tuple(r[j] for r in self.data)

    def transpose(self):
        return Matrix(zip(*self.data), self.field)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d * %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        bt = list(zip(*other.data))
        return Matrix([[_dot(r, c) for c in bt] for r in self.data], self.field)

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Matrix([[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.data, other.data)], self.field)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.data))

    def apply(self, vec):
        vec = [self.field.of(x) for x in vec]
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(_dot(r, vec) for r in self.data)

    def to_int_rows(self):
        out = []
        for r in self.data:
            row = []
            for x in r:
                f = Fraction(x)
                if f.denominator != 1:
                    raise ValueError("entry %s is not an integer" % (x,))
                row.append(f.numerator)
            out.append(row)
        return out

    def __repr__(self):
        return "Matrix(%d x %d over %r)" % (self.rows, self.cols, self.field)


def _dot(a, b):
    it = iter(zip(a, b))
    x, y = next(it)
    acc = x * y
    for x, y in it:
        acc = acc + x * y
    return acc


def rref(m):
    """Reduced row echelon form: returns (matrix, pivot columns, rank)."""
    mat = [list(r) for r in m.data]
    zero = m.field.zero
    pivots = []
    r = 0
    for c in range(m.cols):
        pivot = None
        for i in range(r, m.rows):
            if mat[i][c] != zero:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(m.rows):
            if i != r and mat[i][c] != zero:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Matrix(mat, m.field), tuple(pivots), r


def rank(m):
    return rref(m)[2]


def kernel_basis(m):
    """Basis of the right kernel, one vector per free column.

    Over Q the vectors are primitive integer tuples with positive first
    nonzero entry; over F_p the first nonzero entry is scaled to 1.
    """
    red, pivots, _ = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [m.field.zero] * m.cols
        v[f] = m.field.one
        for i, p in enumerate(pivots):
            v[p] = -red.data[i][f]
        if m.field.char == 0:
            basis.append(normalize_int_vector(v))
        else:
            lead = next(x for x in v if x != 0)
            basis.append(tuple(x / lead for x in v))
    return basis


def int_kernel_basis(m):
    """Z-basis of all integer vectors in the right kernel of a rational
    matrix (the saturated kernel lattice, not just a sublattice).

    Works by unimodular row reduction of the transpose: with U A = E for
    unimodular U and echelon E, the rows of U that map to zero rows of E
    generate every integer kernel vector, since U is invertible over Z.
    """
    if m.field.char != 0:
        raise ValueError("integer kernel needs a matrix over Q")
    a = []
    for j in range(m.cols):
        col = [Fraction(m.data[i][j]) for i in range(m.rows)]
        den = lcm(*(c.denominator for c in col)) if col else 1
        a.append([int(c * den) for c in col])
    n = m.cols
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    row = 0
    for c in range(m.rows):
        if row == n:
            break
        while True:
            nz = [r for r in range(row, n) if a[r][c]]
            if not nz:
                break
            if len(nz) == 1:
                r = nz[0]
                a[row], a[r] = a[r], a[row]
                u[row], u[r] = u[r], u[row]
                row += 1
                break
            r0 = min(nz, key=lambda r: (abs(a[r][c]), r))
            for r in nz:
                if r == r0:
                    continue
                q = a[r][c] // a[r0][c]
                if q:
                    a[r] = [x - q * y for x, y in zip(a[r], a[r0])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[r0])]
    return [normalize_int_vector(u[r]) for r in range(row, n)]


def det(m):
    """Determinant over the matrix's field, by exact Gaussian elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    mat = [list(r) for r in m.data]
    zero = m.field.zero
    acc = m.field.one
    for c in range(m.cols):
        pivot = None
        for i in range(c, m.rows):
            if mat[i][c] != zero:
                pivot = i
                break
        if pivot is None:
            return zero
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            acc = -acc
        acc = acc * mat[c][c]
        inv = mat[c][c]
        for i in range(c + 1, m.rows):
            if mat[i][c] != zero:
                f = mat[i][c] / inv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    return acc


def int_det_bareiss(rows):
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    a = [[int(x) for x in r] for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def char_poly(m):
    """det(t*I - M) for an integer matrix, by the Berkowitz algorithm.

    Division-free: every intermediate quantity is an integer.  Accepts a
    Matrix with integer entries or a plain list of int rows; returns an
    IntPolynomial (ascending coefficients, monic).
    """
    if isinstance(m, Matrix):
        a = m.to_int_rows()
    else:
        a = [[int(x) for x in row] for row in m]
    n = len(a)
    if n == 0 or any(len(r) != n for r in a):
        raise ValueError("need a nonempty square matrix")
    # p holds descending coefficients of det(tI - leading block)
    p = [1, -a[0][0]]
    for k in range(2, n + 1):
        r = a[k - 1][:k - 1]
        s = [a[i][k - 1] for i in range(k - 1)]
        diag = a[k - 1][k - 1]
        u = []
        w = s
        for m_ in range(k - 1):
            u.append(sum(x * y for x, y in zip(r, w)))
            if m_ < k - 2:
                w = [sum(a[i][j] * w[j] for j in range(k - 1))
                     for i in range(k - 1)]
        e = [1, -diag] + [-x for x in u]
        p = [sum(e[m_ - j] * p[j]
                 for j in range(max(0, m_ - len(e) + 1), min(m_, k - 1) + 1))
             for m_ in range(k + 1)]
    return IntPolynomial(list(reversed(p)))
