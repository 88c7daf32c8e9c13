"""Dense matrices over a field and Gaussian elimination.

Exact entries are pivoted on the first nonzero candidate so results are
reproducible; floats use partial pivoting by magnitude.
"""

from __future__ import annotations

from fractions import Fraction

from .field import is_inexact, unwrap


class SingularMatrixError(ArithmeticError):
    pass


class DenseMatrix:
    """Row-major matrix of scalars.  Carries no basis tag.

    Indexing ``M[i][j]`` reads an entry; treat instances as immutable once
    built.
    """

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries) -> "DenseMatrix":
        entries = list(entries)
        if nrows < 1 or ncols < 1 or len(entries) != nrows * ncols:
            raise ValueError(f"{len(entries)} entries do not fill a {nrows}x{ncols} matrix")
        return cls(entries[i * ncols:(i + 1) * ncols] for i in range(nrows))

    @classmethod
    def identity(cls, n: int, one=1, zero=0) -> "DenseMatrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None, zero=0) -> "DenseMatrix":
        return cls([[zero] * (nrows if ncols is None else ncols) for _ in range(nrows)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, i):
        return self._rows[i]

    def __iter__(self):
        return iter(self._rows)

    def __len__(self):
        return self.nrows

    def entries(self) -> list:
        return [v for row in self._rows for v in row]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            unwrap(a) == unwrap(b) for a, b in zip(self.entries(), other.entries())
        )

    __hash__ = None

    def __repr__(self):
        return f"DenseMatrix({self._rows!r})"

    @property
    def T(self) -> "DenseMatrix":
        return DenseMatrix(zip(*self._rows))

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries())

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        _same_shape(self, other)
        return DenseMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self, other)])

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        _same_shape(self, other)
        return DenseMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self, other)])

    def __neg__(self) -> "DenseMatrix":
        return DenseMatrix([[-a for a in r] for r in self])

    def scale(self, c) -> "DenseMatrix":
        return DenseMatrix([[c * a for a in r] for r in self])

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        return matmul(self, other)

    def map(self, fn) -> "DenseMatrix":
        return DenseMatrix([[fn(a) for a in r] for r in self])


def _same_shape(a: DenseMatrix, b: DenseMatrix) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def matmul(A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    if A.ncols != B.nrows:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    cols = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in cols:
            acc = row[0] * col[0]
            for k in range(1, len(row)):
                acc = acc + row[k] * col[k]
            out_row.append(acc)
        out.append(out_row)
    return DenseMatrix(out)


def _lift(v):
    # plain ints would turn division into float division
    return Fraction(v) if isinstance(v, int) else v


def _pivot_row(M: list[list], col: int, start: int) -> int | None:
    if any(is_inexact(M[r][col]) for r in range(start, len(M))):
        best = max(range(start, len(M)), key=lambda r: abs(unwrap(M[r][col])))
        return best if M[best][col] != 0 else None
    for r in range(start, len(M)):
        if M[r][col] != 0:
            return r
    return None


def solve_linear(A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    """Return X with ``A @ X == B``.

    Raises :class:`SingularMatrixError` if ``A`` is singular.
    """
    n = A.nrows
    if not A.is_square():
        raise ValueError(f"coefficient matrix must be square, got {A.shape}")
    if B.nrows != n:
        raise ValueError(f"right-hand side has {B.nrows} rows, expected {n}")
    M = [[_lift(v) for v in list(a) + list(b)] for a, b in zip(A, B)]
    width = n + B.ncols
    for col in range(n):
        p = _pivot_row(M, col, col)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        if p != col:
            M[col], M[p] = M[p], M[col]
        pivot_row = M[col]
        piv = pivot_row[col]
        for r in range(col + 1, n):
            row = M[r]
            if row[col] == 0:
                continue
            f = row[col] / piv
            for k in range(col + 1, width):
                row[k] = row[k] - f * pivot_row[k]
            row[col] = row[col] - row[col]
    X = [[None] * B.ncols for _ in range(n)]
    for i in range(n - 1, -1, -1):
        row = M[i]
        for j in range(B.ncols):
            acc = row[n + j]
            for k in range(i + 1, n):
                acc = acc - row[k] * X[k][j]
            X[i][j] = acc / row[i]
    return DenseMatrix(X)


def inverse(A: DenseMatrix) -> DenseMatrix:
    one = 1.0 if is_inexact(A[0][0]) else Fraction(1)
    return solve_linear(A, DenseMatrix.identity(A.nrows, one=one, zero=one * 0))


def determinant(A: DenseMatrix):
    """Determinant by elimination, tracking the sign of row swaps."""
    if not A.is_square():
        raise ValueError(f"determinant of non-square {A.shape} matrix")
    M = [[_lift(v) for v in row] for row in A]
    n = len(M)
    det = 1
    for col in range(n):
        p = _pivot_row(M, col, col)
        if p is None:
            return M[0][0] * 0
        if p != col:
            M[col], M[p] = M[p], M[col]
            det = -det
        piv = M[col][col]
        det = det * piv
        for r in range(col + 1, n):
            if M[r][col] == 0:
                continue
            f = M[r][col] / piv
            for k in range(col + 1, n):
                M[r][k] = M[r][k] - f * M[col][k]
    return det
