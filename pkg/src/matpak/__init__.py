"""Dense matrix algebra over floats, a bracket-dash text codec, and an
exact-rational oracle for checking results."""
from .codec import ParseError, ParseErrorKind, parse, serialize
from .core import (
    IdentityVerdict,
    MatError,
    MatErrorKind,
    Matrix,
    adjoint,
    all_minors,
    cofactor,
    determinant,
    fill,
    from_data,
    inverse,
    is_identity,
    is_square,
    minor,
    new_zero,
    transpose,
)
from .ops import add, mul, pow, sub
from .oracle import Rational, RationalMatrix, compare, det_bareiss, det_leibniz, exact_adjugate, lift

__all__ = [
    "IdentityVerdict", "MatError", "MatErrorKind", "Matrix", "ParseError", "ParseErrorKind",
    "Rational", "RationalMatrix", "add", "adjoint", "all_minors", "cofactor", "compare",
    "det_bareiss", "det_leibniz", "determinant", "exact_adjugate", "fill", "from_data",
    "inverse", "is_identity", "is_square", "lift", "minor", "mul", "new_zero", "parse",
    "pow", "serialize", "sub", "transpose",
]
