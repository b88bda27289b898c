"""Dense matrix value type and its unary operations.

Indices are 0-based everywhere. Textbook (1-based) position ``M(i, j)``
corresponds to ``minor(m, i - 1, j - 1)`` here.
"""
from __future__ import annotations

import enum
import math
from collections.abc import Sequence
from typing import Any

#: Largest order accepted by the cofactor-expansion determinant (O(n!)).
MAX_DET_ORDER = 10

#: ``inverse`` refuses matrices whose determinant is smaller than this.
SINGULAR_THRESHOLD = 1e-12


class MatErrorKind(enum.Enum):
    INVALID_SIZE = "InvalidSize"
    SIZE_MISMATCH = "SizeMismatch"
    DIMENSION_MISMATCH = "DimensionMismatch"
    NON_SQUARE = "NonSquare"
    INDEX_OUT_OF_BOUNDS = "IndexOutOfBounds"
    SINGULAR = "Singular"
    UNSUPPORTED_EXPONENT = "UnsupportedExponent"
    NON_FINITE = "NonFinite"


class MatError(Exception):
    """Algebraic or structural failure of a matrix operation.

    ``kind`` is a :class:`MatErrorKind`, ``op`` names the failing operation
    and ``context`` holds the offending dimensions, indices or values.
    """

    def __init__(self, kind: MatErrorKind, message: str, op: str = "", **context: Any):
        super().__init__(message)
        self.kind = kind
        self.message = message
        self.op = op
        self.context = context

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.message}"


class IdentityVerdict(enum.IntEnum):
    """Result of :func:`is_identity`; integer values follow the 1/0/2 convention."""

    NOT_IDENTITY = 0
    IDENTITY = 1
    NOT_SQUARE = 2


def _check_size(rows: int, cols: int, op: str) -> None:
    if rows < 1 or cols < 1:
        raise MatError(
            MatErrorKind.INVALID_SIZE,
            f"{op}: dimensions must be at least 1x1, got {rows}x{cols}",
            op, rows=rows, cols=cols,
        )


class Matrix:
    """Immutable rows x cols grid of finite floats stored row-major.

    Build one with :func:`new_zero`, :func:`from_data` or
    :meth:`Matrix.from_rows`; the bare constructor takes a flat row-major
    sequence.
    """

    __slots__ = ("_rows", "_cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[float], *, op: str = "Matrix"):
        _check_size(rows, cols, op)
        values = tuple(float(x) for x in data)
        if len(values) != rows * cols:
            raise MatError(
                MatErrorKind.SIZE_MISMATCH,
                f"{op}: expected {rows * cols} elements, got {len(values)}",
                op, rows=rows, cols=cols, length=len(values),
            )
        for k, x in enumerate(values):
            if not math.isfinite(x):
                raise MatError(
                    MatErrorKind.NON_FINITE,
                    f"{op}: element ({k // cols},{k % cols}) is {x}",
                    op, row=k // cols, col=k % cols, value=x,
                )
        self._rows = rows
        self._cols = cols
        self._data = values

    @classmethod
    def from_rows(cls, grid: Sequence[Sequence[float]]) -> Matrix:
        """Build a matrix from a non-empty rectangular list of rows."""
        if len(grid) == 0 or len(grid[0]) == 0:
            raise MatError(MatErrorKind.INVALID_SIZE, "from_rows: empty grid", "from_rows")
        return from_data(grid, len(grid), len(grid[0]))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def data(self) -> tuple[float, ...]:
        """Flat row-major element tuple."""
        return self._data

    def __getitem__(self, index: tuple[int, int]) -> float:
        i, j = index
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise MatError(
                MatErrorKind.INDEX_OUT_OF_BOUNDS,
                f"index ({i},{j}) outside {self._rows}x{self._cols}",
                "getitem", row=i, col=j,
            )
        return self._data[i * self._cols + j]

    def row(self, i: int) -> tuple[float, ...]:
        return self._data[i * self._cols:(i + 1) * self._cols]

    def to_list(self) -> list[list[float]]:
        return [list(self.row(i)) for i in range(self._rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._data))

    def __repr__(self) -> str:
        return f"Matrix.from_rows({self.to_list()!r})"


def new_zero(rows: int, cols: int) -> Matrix:
    """Return a rows x cols matrix of zeros."""
    _check_size(rows, cols, "new_zero")
    return Matrix(rows, cols, [0.0] * (rows * cols), op="new_zero")


def _flatten(grid: Sequence[Sequence[float]], rows: int, cols: int, op: str) -> list[float]:
    if len(grid) != rows or any(len(r) != cols for r in grid):
        shape = [len(r) for r in grid]
        raise MatError(
            MatErrorKind.SIZE_MISMATCH,
            f"{op}: grid row lengths {shape} do not form a {rows}x{cols} matrix",
            op, rows=rows, cols=cols, row_lengths=shape,
        )
    return [x for r in grid for x in r]


def from_data(grid: Sequence[Sequence[float]], rows: int, cols: int) -> Matrix:
    """Copy a row-major grid into a new matrix of the declared size."""
    _check_size(rows, cols, "from_data")
    return Matrix(rows, cols, _flatten(grid, rows, cols, "from_data"), op="from_data")


def fill(m: Matrix, grid: Sequence[Sequence[float]]) -> Matrix:
    """Return a new matrix with ``m``'s dimensions holding ``grid``."""
    return Matrix(m.rows, m.cols, _flatten(grid, m.rows, m.cols, "fill"), op="fill")


def is_square(m: Matrix) -> bool:
    return m.rows == m.cols


def is_identity(m: Matrix) -> IdentityVerdict:
    """Classify ``m``: exact ones on the diagonal and exact zeros elsewhere."""
    if m.rows != m.cols:
        return IdentityVerdict.NOT_SQUARE
    n = m.rows
    for k, x in enumerate(m.data):
        expected = 1.0 if k // n == k % n else 0.0
        if x != expected:
            return IdentityVerdict.NOT_IDENTITY
    return IdentityVerdict.IDENTITY


def transpose(m: Matrix) -> Matrix:
    r, c, d = m.rows, m.cols, m.data
    return Matrix(c, r, [d[i * c + j] for j in range(c) for i in range(r)], op="transpose")


def _minor_rows(rows: list[list[float]], row: int, col: int) -> list[list[float]]:
    # Index-shift rule: result(i, j) = src(i + [i >= row], j + [j >= col]).
    return [r[:col] + r[col + 1:] for i, r in enumerate(rows) if i != row]


def minor(m: Matrix, row: int, col: int) -> Matrix:
    """Return ``m`` with row ``row`` and column ``col`` deleted."""
    if m.rows < 2 or m.cols < 2:
        raise MatError(
            MatErrorKind.INVALID_SIZE,
            f"minor: {m.rows}x{m.cols} matrix has no minors",
            "minor", rows=m.rows, cols=m.cols,
        )
    if not (0 <= row < m.rows and 0 <= col < m.cols):
        raise MatError(
            MatErrorKind.INDEX_OUT_OF_BOUNDS,
            f"minor: position ({row},{col}) outside {m.rows}x{m.cols}",
            "minor", row=row, col=col, rows=m.rows, cols=m.cols,
        )
    sub = _minor_rows(m.to_list(), row, col)
    return Matrix(m.rows - 1, m.cols - 1, [x for r in sub for x in r], op="minor")


def all_minors(m: Matrix) -> list[list[Matrix]]:
    """Grid ``g`` with ``g[i][j] == minor(m, i, j)``."""
    if m.rows < 2 or m.cols < 2:
        raise MatError(
            MatErrorKind.INVALID_SIZE,
            f"all_minors: {m.rows}x{m.cols} matrix has no minors",
            "all_minors", rows=m.rows, cols=m.cols,
        )
    return [[minor(m, i, j) for j in range(m.cols)] for i in range(m.rows)]


def _require_square(m: Matrix, op: str) -> None:
    if m.rows != m.cols:
        raise MatError(
            MatErrorKind.NON_SQUARE,
            f"{op}: matrix is {m.rows}x{m.cols}, not square",
            op, rows=m.rows, cols=m.cols,
        )


def _laplace(a: list[list[float]]) -> float:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = 0.0
    for j in range(n):
        term = a[0][j] * _laplace(_minor_rows(a, 0, j))
        total = total + term if j % 2 == 0 else total - term
    return total


def determinant(m: Matrix) -> float:
    """Cofactor expansion along the first row.

    Exponential in the order, so matrices larger than
    :data:`MAX_DET_ORDER` are rejected with ``InvalidSize``.
    """
    _require_square(m, "determinant")
    if m.rows > MAX_DET_ORDER:
        raise MatError(
            MatErrorKind.INVALID_SIZE,
            f"determinant: order {m.rows} exceeds cap {MAX_DET_ORDER}",
            "determinant", rows=m.rows, cap=MAX_DET_ORDER,
        )
    det = _laplace(m.to_list())
    if not math.isfinite(det):
        raise MatError(MatErrorKind.NON_FINITE, f"determinant: result is {det}", "determinant")
    return det


def cofactor(m: Matrix) -> Matrix:
    """Signed-minor matrix: entry (i, j) is (-1)**(i+j) * det(minor(m, i, j))."""
    _require_square(m, "cofactor")
    n = m.rows
    out = []
    for i, row in enumerate(all_minors(m)):
        for j, sub in enumerate(row):
            d = determinant(sub)
            out.append(-d if (i + j) % 2 else d)
    return Matrix(n, n, out, op="cofactor")


def adjoint(m: Matrix) -> Matrix:
    _require_square(m, "adjoint")
    return transpose(cofactor(m))


def inverse(m: Matrix) -> Matrix:
    """Adjoint divided by the determinant.

    Raises ``Singular`` when ``|det| < SINGULAR_THRESHOLD``.
    """
    _require_square(m, "inverse")
    det = determinant(m)
    if abs(det) < SINGULAR_THRESHOLD:
        raise MatError(
            MatErrorKind.SINGULAR, "determinant below threshold",
            "inverse", determinant=det, threshold=SINGULAR_THRESHOLD,
        )
    if m.rows == 1:
        return Matrix(1, 1, [1.0 / det], op="inverse")
    adj = adjoint(m)
    return Matrix(m.rows, m.cols, [x / det for x in adj.data], op="inverse")
