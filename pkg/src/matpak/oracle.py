"""Exact rational mirror of the float core, used to check it.

Two determinant algorithms from different families are provided, a
permutation (Leibniz) sum and fraction-free (Bareiss) elimination, so a bug
shared with the core's cofactor recursion cannot hide.
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from fractions import Fraction

from .core import Matrix, MatError, MatErrorKind

Rational = Fraction

#: Largest order accepted by :func:`det_leibniz` (8! = 40320 terms).
MAX_LEIBNIZ_ORDER = 8


class RationalMatrix:
    """Immutable rows x cols grid of :class:`~fractions.Fraction` values."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[Fraction | int]):
        if rows < 1 or cols < 1:
            raise MatError(
                MatErrorKind.INVALID_SIZE,
                f"RationalMatrix: dimensions must be at least 1x1, got {rows}x{cols}",
                "RationalMatrix", rows=rows, cols=cols,
            )
        values = tuple(Fraction(x) for x in data)
        if len(values) != rows * cols:
            raise MatError(
                MatErrorKind.SIZE_MISMATCH,
                f"RationalMatrix: expected {rows * cols} elements, got {len(values)}",
                "RationalMatrix", rows=rows, cols=cols, length=len(values),
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", values)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def from_rows(cls, grid: Sequence[Sequence[Fraction | int]]) -> RationalMatrix:
        if not grid or not grid[0] or any(len(r) != len(grid[0]) for r in grid):
            raise MatError(MatErrorKind.SIZE_MISMATCH, "from_rows: grid is empty or ragged", "from_rows")
        return cls(len(grid), len(grid[0]), [x for r in grid for x in r])

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.data[i * self.cols + j]

    def to_list(self) -> list[list[Fraction]]:
        return [list(self.data[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"RationalMatrix.from_rows({[[str(x) for x in r] for r in self.to_list()]!r})"


def lift(m: Matrix) -> RationalMatrix:
    """Exact rational image of a float matrix (every finite double is dyadic)."""
    return RationalMatrix(m.rows, m.cols, [Fraction(x) for x in m.data])


def _require_square(m: RationalMatrix, op: str) -> None:
    if m.rows != m.cols:
        raise MatError(
            MatErrorKind.NON_SQUARE,
            f"{op}: matrix is {m.rows}x{m.cols}, not square",
            op, rows=m.rows, cols=m.cols,
        )


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_leibniz(m: RationalMatrix) -> Fraction:
    """Signed sum over all permutations of one element per row and column."""
    _require_square(m, "det_leibniz")
    n = m.rows
    if n > MAX_LEIBNIZ_ORDER:
        raise MatError(
            MatErrorKind.INVALID_SIZE,
            f"det_leibniz: order {n} exceeds cap {MAX_LEIBNIZ_ORDER}",
            "det_leibniz", rows=n, cap=MAX_LEIBNIZ_ORDER,
        )
    a = m.to_list()
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        term = Fraction(_permutation_sign(perm))
        for i, j in enumerate(perm):
            term *= a[i][j]
            if not term:
                break
        total += term
    return total


def _bareiss_int(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact: divisible by the previous pivot (Sylvester's identity).
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_bareiss(m: RationalMatrix) -> Fraction:
    """Determinant by fraction-free elimination.

    Each row is first scaled to integers by the LCM of its denominators;
    the integer determinant is divided by the product of those scales.
    """
    _require_square(m, "det_bareiss")
    scale = 1
    rows = []
    for r in m.to_list():
        lcm = math.lcm(*(x.denominator for x in r))
        scale *= lcm
        rows.append([x.numerator * (lcm // x.denominator) for x in r])
    return Fraction(_bareiss_int(rows), scale)


def exact_transpose(m: RationalMatrix) -> RationalMatrix:
    r, c, d = m.rows, m.cols, m.data
    return RationalMatrix(c, r, [d[i * c + j] for j in range(c) for i in range(r)])


def exact_minor(m: RationalMatrix, row: int, col: int) -> RationalMatrix:
    if m.rows < 2 or m.cols < 2:
        raise MatError(MatErrorKind.INVALID_SIZE, "exact_minor: matrix has no minors", "exact_minor")
    if not (0 <= row < m.rows and 0 <= col < m.cols):
        raise MatError(
            MatErrorKind.INDEX_OUT_OF_BOUNDS,
            f"exact_minor: position ({row},{col}) outside {m.rows}x{m.cols}",
            "exact_minor", row=row, col=col,
        )
    return RationalMatrix(
        m.rows - 1, m.cols - 1,
        [m[i, j] for i in range(m.rows) if i != row for j in range(m.cols) if j != col],
    )


def exact_cofactor(m: RationalMatrix) -> RationalMatrix:
    _require_square(m, "exact_cofactor")
    n = m.rows
    if n == 1:
        return RationalMatrix(1, 1, [1])
    return RationalMatrix(n, n, [
        (-1) ** (i + j) * det_bareiss(exact_minor(m, i, j))
        for i in range(n) for j in range(n)
    ])


def exact_adjugate(m: RationalMatrix) -> RationalMatrix:
    """Transposed cofactor matrix; ``m @ adj(m) == det(m) * I`` exactly."""
    _require_square(m, "exact_adjugate")
    return exact_transpose(exact_cofactor(m))


def exact_inverse(m: RationalMatrix) -> RationalMatrix:
    _require_square(m, "exact_inverse")
    det = det_bareiss(m)
    if det == 0:
        raise MatError(MatErrorKind.SINGULAR, "determinant is zero", "exact_inverse")
    adj = exact_adjugate(m)
    return RationalMatrix(m.rows, m.cols, [x / det for x in adj.data])


def _require_same_dims(p: RationalMatrix, q: RationalMatrix, op: str) -> None:
    if p.shape != q.shape:
        raise MatError(
            MatErrorKind.DIMENSION_MISMATCH,
            f"{op}: {p.rows}x{p.cols} vs {q.rows}x{q.cols}",
            op, left=p.shape, right=q.shape,
        )


def exact_add(p: RationalMatrix, q: RationalMatrix) -> RationalMatrix:
    _require_same_dims(p, q, "exact_add")
    return RationalMatrix(p.rows, p.cols, [a + b for a, b in zip(p.data, q.data)])


def exact_sub(p: RationalMatrix, q: RationalMatrix) -> RationalMatrix:
    _require_same_dims(p, q, "exact_sub")
    return RationalMatrix(p.rows, p.cols, [a - b for a, b in zip(p.data, q.data)])


def exact_mul(p: RationalMatrix, q: RationalMatrix) -> RationalMatrix:
    if p.cols != q.rows:
        raise MatError(
            MatErrorKind.DIMENSION_MISMATCH,
            f"exact_mul: inner dimensions {p.cols} and {q.rows} differ",
            "exact_mul", left=p.shape, right=q.shape,
        )
    return RationalMatrix(p.rows, q.cols, [
        sum((p[i, k] * q[k, j] for k in range(p.cols)), Fraction(0))
        for i in range(p.rows) for j in range(q.cols)
    ])


def exact_pow(p: RationalMatrix, n: int) -> RationalMatrix:
    _require_square(p, "exact_pow")
    if n < 1:
        raise MatError(MatErrorKind.UNSUPPORTED_EXPONENT, f"exact_pow: exponent {n}", "exact_pow")
    result = p
    for _ in range(n - 1):
        result = exact_mul(p, result)
    return result


def compare(float_result: Matrix, exact_result: RationalMatrix, tol: float) -> bool:
    """True when shapes match and every element is within ``tol`` of the exact value.

    The exact value is rounded to the nearest double before subtracting.
    """
    if float_result.shape != exact_result.shape:
        return False
    for x, q in zip(float_result.data, exact_result.data):
        try:
            ref = float(q)
        except OverflowError:
            return False
        if not abs(x - ref) <= tol:
            return False
    return True
