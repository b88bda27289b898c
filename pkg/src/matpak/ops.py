"""Binary and repeated matrix operations."""
from __future__ import annotations

from .core import Matrix, MatError, MatErrorKind, transpose


def _require_same_dims(p: Matrix, q: Matrix, op: str) -> None:
    if p.rows != q.rows:
        raise MatError(
            MatErrorKind.DIMENSION_MISMATCH,
            f"{op}: row size difference ({p.rows} vs {q.rows})",
            op, axis="rows", left=p.shape, right=q.shape,
        )
    if p.cols != q.cols:
        raise MatError(
            MatErrorKind.DIMENSION_MISMATCH,
            f"{op}: column size difference ({p.cols} vs {q.cols})",
            op, axis="cols", left=p.shape, right=q.shape,
        )


def add(p: Matrix, q: Matrix) -> Matrix:
    _require_same_dims(p, q, "add")
    return Matrix(p.rows, p.cols, [a + b for a, b in zip(p.data, q.data)], op="add")


def sub(p: Matrix, q: Matrix) -> Matrix:
    _require_same_dims(p, q, "sub")
    return Matrix(p.rows, p.cols, [a - b for a, b in zip(p.data, q.data)], op="sub")


def mul(p: Matrix, q: Matrix) -> Matrix:
    """Matrix product computed as column-by-column dot products of p^T and q.

    Each output element sums its terms in increasing inner index, the same
    order as the textbook row-by-column loop.
    """
    if p.cols != q.rows:
        raise MatError(
            MatErrorKind.DIMENSION_MISMATCH,
            f"mul: column size of P ({p.cols}) is different from the row size of Q ({q.rows})",
            "mul", left=p.shape, right=q.shape,
        )
    pt = transpose(p)
    inner, n, m = q.rows, p.rows, q.cols
    a, b = pt.data, q.data
    out = []
    for i in range(n):
        for j in range(m):
            acc = 0.0
            for k in range(inner):
                acc += a[k * n + i] * b[k * m + j]
            out.append(acc)
    return Matrix(n, m, out, op="mul")


def pow(p: Matrix, n: int) -> Matrix:  # noqa: A001 - mirrors the operation name
    """``p`` multiplied by itself ``n`` times, as ``mul(p, pow(p, n - 1))``."""
    if p.rows != p.cols:
        raise MatError(
            MatErrorKind.NON_SQUARE,
            f"pow: matrix is {p.rows}x{p.cols}, not square",
            "pow", rows=p.rows, cols=p.cols,
        )
    if n < 1:
        raise MatError(
            MatErrorKind.UNSUPPORTED_EXPONENT,
            f"pow: exponent {n} is not a positive integer",
            "pow", exponent=n,
        )
    result = p
    for _ in range(n - 1):
        result = mul(p, result)
    return result
