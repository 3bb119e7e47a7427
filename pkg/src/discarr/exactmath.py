"""Exact rational scalars and dense matrices.

Scalars are ``fractions.Fraction`` (always reduced, positive denominator).
Determinants and ranks run fraction-free over the integers after clearing
denominators row by row, so intermediate entries stay bounded by minors of
the scaled matrix.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


def rat(x: RatLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def rat_str(x: Fraction) -> str:
    """Serialize as "p/q", omitting the denominator when it is 1."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Matrix:
    """Immutable dense rational matrix, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[RatLike]):
        entries = tuple(rat(x) for x in entries)
        if len(entries) != rows * cols:
            raise DimensionError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RatLike]]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged rows")
        return cls(nrows, ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [self[i, j] for j in range(self.cols) for i in range(self.rows)],
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[t] * other[t, j] for t in range(self.cols)))
        return Matrix(self.rows, other.cols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(rat_str(x) for x in self.row(i)) for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def to_lists(self) -> list:
        return [[rat_str(x) for x in self.row(i)] for i in range(self.rows)]


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError("vector length mismatch")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def int_row(row: Sequence[Fraction]) -> list:
    """Clear denominators of one row; returns integer entries (scale dropped)."""
    lcm = 1
    for x in row:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    return [int(x * lcm) for x in row]


def primitive_row(row: Sequence[Fraction]) -> tuple:
    """Integer row divided by its gcd, leading nonzero entry positive."""
    ints = int_row([rat(x) for x in row])
    g = 0
    for x in ints:
        g = math.gcd(g, abs(x))
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


class IntPivotBasis:
    """Incremental fraction-free (Bareiss) elimination over integer rows.

    Pivot rows are kept in insertion order; reducing a vector divides by the
    previous pivot value at each step, which is exact by the Sylvester
    identity. push/pop give the stack discipline needed by subset searches.
    """

    __slots__ = ("width", "pivots", "pivcols", "denoms")

    def __init__(self, width: int):
        self.width = width
        self.pivots: list = []
        self.pivcols: list = []
        self.denoms: list = [1]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def residual(self, v: Sequence[int]) -> list:
        v = list(v)
        w = self.width
        for j, (p, c) in enumerate(zip(self.pivots, self.pivcols)):
            d = self.denoms[j + 1]
            prev = self.denoms[j]
            vc = v[c]
            for t in range(w):
                v[t] = (d * v[t] - vc * p[t]) // prev
            if not any(v):
                break
        return v

    def push(self, v: Sequence[int]) -> bool:
        """Reduce v and adopt it as a new pivot; False if dependent."""
        r = self.residual(v)
        for c, x in enumerate(r):
            if x:
                self.pivots.append(r)
                self.pivcols.append(c)
                self.denoms.append(x)
                return True
        return False

    def pop(self) -> None:
        self.pivots.pop()
        self.pivcols.pop()
        self.denoms.pop()

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.residual(v))


def det(m: Matrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.shape} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for i in range(n):
        row = list(m.row(i))
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        scale *= lcm
        a.append([int(x * lcm) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], 1) / scale


def rank(m: Matrix) -> int:
    """Exact rank; 0 for an empty matrix."""
    if m.rows == 0 or m.cols == 0:
        return 0
    basis = IntPivotBasis(m.cols)
    for i in range(m.rows):
        basis.push(int_row(m.row(i)))
    return basis.rank


def minor(m: Matrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> Fraction:
    """Determinant of the submatrix on 1-based, strictly increasing indices."""
    if len(row_idx) != len(col_idx):
        raise DimensionError("row and column index counts differ")
    if not row_idx:
        raise DimensionError("empty index lists")
    for idx, bound, what in ((row_idx, m.rows, "row"), (col_idx, m.cols, "column")):
        if list(idx) != sorted(set(idx)):
            raise ValueError(f"{what} indices must be strictly increasing")
        if idx[0] < 1 or idx[-1] > bound:
            raise IndexError(f"{what} index out of range 1..{bound}")
    sub = Matrix(
        len(row_idx),
        len(col_idx),
        [m[i - 1, j - 1] for i in row_idx for j in col_idx],
    )
    return det(sub)


def rref(m: Matrix) -> tuple:
    """Reduced row echelon form; returns (Matrix, pivot column list)."""
    a = m.row_lists()
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(nrows, ncols, [x for row in a for x in row]), pivots


def nullspace(m: Matrix) -> Matrix:
    """Matrix whose columns form an exact basis of {x : Mx = 0}."""
    if m.cols == 0:
        return Matrix(0, 0, [])
    if m.rows == 0:
        return Matrix.identity(m.cols)
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    cols = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r, f]
        cols.append(v)
    return Matrix(m.cols, len(cols), [cols[j][i] for i in range(m.cols) for j in range(len(cols))])


def solve_square(m: Matrix, rhs: Sequence[Fraction]) -> list:
    """Unique exact solution of a nonsingular square system."""
    if m.rows != m.cols:
        raise DimensionError("square system required")
    n = m.rows
    a = [list(m.row(i)) + [rat(rhs[i])] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            raise SingularMatrixError("singular system")
        a[c], a[piv] = a[piv], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [a[i][n] for i in range(n)]


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise DimensionError("inverse of non-square matrix")
    n = m.rows
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        cols.append(solve_square(m, e))
    return Matrix(n, n, [cols[j][i] for i in range(n) for j in range(n)])


def cayley_orthogonal(s: Matrix) -> Matrix:
    """Rational special orthogonal matrix (I - S)(I + S)^-1 from skew S."""
    if s.rows != s.cols:
        raise DimensionError("skew-symmetric input must be square")
    if s != -s.transpose():
        raise ValueError("input is not skew-symmetric")
    eye = Matrix.identity(s.rows)
    try:
        return (eye - s) @ inverse(eye + s)
    except SingularMatrixError:
        raise SingularMatrixError("I + S is singular") from None
