"""Bracket-dash text format: ``[[2 3 4]-[5 6 7]]``.

Grammar after trimming surrounding whitespace::

    matrix := "[" row (WS* "-" WS* row)* "]"
    row    := "[" WS* number (WS+ number)* WS* "]"
    number := ["+"|"-"] digits ["." digits] [("e"|"E") ["+"|"-"] digits]
    WS     := " "

A ``-`` is a row delimiter only between ``]`` and ``[``, so negative
elements are unambiguous. Parsing is lenient about spacing; serializing
always produces the single canonical form.
"""
from __future__ import annotations

import enum
import math
import re

from .core import Matrix

_NUMBER = re.compile(r"[+-]?[0-9]+(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?")


class ParseErrorKind(enum.Enum):
    UNBALANCED_BRACKETS = "UnbalancedBrackets"
    RAGGED_ROWS = "RaggedRows"
    EMPTY_MATRIX = "EmptyMatrix"
    EMPTY_ROW = "EmptyRow"
    INVALID_NUMBER = "InvalidNumber"
    TRAILING_GARBAGE = "TrailingGarbage"


class ParseError(ValueError):
    """Malformed matrix text. ``position`` is a 0-based offset into the input."""

    def __init__(self, kind: ParseErrorKind, position: int, detail: str, message: str):
        super().__init__(message)
        self.kind = kind
        self.position = position
        self.detail = detail
        self.message = message

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.message} at offset {self.position}"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        stripped = text.lstrip()
        self.pos = len(text) - len(stripped)
        self.end = len(stripped.rstrip()) + self.pos

    def fail(self, kind: ParseErrorKind, message: str, pos: int | None = None, detail: str = ""):
        pos = self.pos if pos is None else pos
        raise ParseError(kind, min(pos, len(self.text)), detail, message)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < self.end else ""

    def skip_spaces(self) -> None:
        while self.pos < self.end and self.text[self.pos] == " ":
            self.pos += 1

    def expect_open(self, what: str) -> None:
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            return
        if not ch:
            self.fail(ParseErrorKind.UNBALANCED_BRACKETS, f"input ended, expected '[' to open {what}")
        self.fail(ParseErrorKind.UNBALANCED_BRACKETS, f"expected '[' to open {what}, found {ch!r}", detail=ch)

    def parse(self) -> Matrix:
        if self.pos >= self.end:
            self.fail(ParseErrorKind.EMPTY_MATRIX, "no matrix in input")
        if self.peek() != "[":
            self.fail(
                ParseErrorKind.TRAILING_GARBAGE,
                "text before the opening bracket",
                detail=self.text[self.pos:self.end],
            )
        self.pos += 1
        self.skip_spaces()
        if self.peek() == "]":
            self.fail(ParseErrorKind.EMPTY_MATRIX, "matrix has no rows")

        rows = [self.parse_row()]
        while True:
            self.skip_spaces()
            ch = self.peek()
            if ch == "]":
                self.pos += 1
                break
            if ch == "-":
                self.pos += 1
                self.skip_spaces()
                rows.append(self.parse_row())
                continue
            if not ch:
                self.fail(ParseErrorKind.UNBALANCED_BRACKETS, "input ended, missing closing ']' of matrix")
            self.fail(
                ParseErrorKind.UNBALANCED_BRACKETS,
                f"expected '-' or ']' after row, found {ch!r}", detail=ch,
            )

        if self.pos < self.end:
            self.skip_spaces()
            rest = self.text[self.pos:self.end]
            kind = (
                ParseErrorKind.UNBALANCED_BRACKETS
                if "[" in rest or "]" in rest
                else ParseErrorKind.TRAILING_GARBAGE
            )
            self.fail(kind, "text after the closing bracket", detail=rest)

        width = len(rows[0][1])
        for start, values in rows[1:]:
            if len(values) != width:
                self.fail(
                    ParseErrorKind.RAGGED_ROWS,
                    f"row has {len(values)} elements, first row has {width}",
                    pos=start, detail=str(len(values)),
                )
        return Matrix(len(rows), width, [x for _, r in rows for x in r], op="parse")

    def parse_row(self) -> tuple[int, list[float]]:
        start = self.pos
        self.expect_open("a row")
        values: list[float] = []
        while True:
            self.skip_spaces()
            ch = self.peek()
            if ch == "]":
                self.pos += 1
                break
            if not ch:
                self.fail(ParseErrorKind.UNBALANCED_BRACKETS, "input ended inside a row")
            if ch == "[":
                self.fail(ParseErrorKind.UNBALANCED_BRACKETS, "unexpected '[' inside a row", detail=ch)
            values.append(self.parse_number())
        if not values:
            self.fail(ParseErrorKind.EMPTY_ROW, "row has no elements", pos=start)
        return start, values

    def parse_number(self) -> float:
        start = self.pos
        while self.pos < self.end and self.text[self.pos] not in " []":
            self.pos += 1
        token = self.text[start:self.pos]
        if not _NUMBER.fullmatch(token):
            self.fail(ParseErrorKind.INVALID_NUMBER, f"invalid number {token!r}", pos=start, detail=token)
        value = float(token)
        if not math.isfinite(value):
            self.fail(ParseErrorKind.INVALID_NUMBER, f"number {token!r} overflows", pos=start, detail=token)
        return value


def parse(text: str) -> Matrix:
    """Parse bracket-dash text into a :class:`Matrix`.

    >>> parse("[[2 3 4]-[5 6 7]]").to_list()
    [[2.0, 3.0, 4.0], [5.0, 6.0, 7.0]]
    """
    return _Parser(text).parse()


def format_scalar(x: float, precision: int | None = None) -> str:
    """Shortest round-trip decimal, with no fractional part for integral values.

    With ``precision``, fixed-point output with that many decimals instead.
    """
    if precision is not None:
        return f"{x:.{precision}f}"
    s = repr(float(x))
    if s.endswith(".0"):
        s = s[:-2]
    return s


def serialize(m: Matrix, precision: int | None = None) -> str:
    """Canonical bracket-dash text for ``m``.

    >>> serialize(parse("[[ 2  3 4]  -  [5 6 7]]"))
    '[[2 3 4]-[5 6 7]]'
    """
    rows = (
        "[" + " ".join(format_scalar(x, precision) for x in m.row(i)) + "]"
        for i in range(m.rows)
    )
    return "[" + "-".join(rows) + "]"
