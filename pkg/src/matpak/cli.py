"""Command-line matrix calculator.

    matpak <op> <operand>... [op-args...] [--check] [--precision N]

Operands are inline bracket-dash strings, ``@path`` to read a file, or ``-``
for standard input (at most once). ``minor`` takes 0-based row and column
indices.

Exit status: 0 success, 1 matrix error / IO failure / failed check,
2 parse error, 3 usage error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Callable, TextIO

from . import core, ops, oracle
from .codec import ParseError, format_scalar, parse, serialize
from .core import Matrix, MatError

EXIT_OK = 0
EXIT_MAT_ERROR = 1
EXIT_PARSE_ERROR = 2
EXIT_USAGE = 3

CHECK_TOLERANCE = 1e-9


class UsageError(Exception):
    pass


class OperandIOError(Exception):
    pass


class CheckFailed(Exception):
    pass


@dataclass(frozen=True)
class _Op:
    arity: int
    int_args: tuple[str, ...]
    compute: Callable
    exact: Callable | None
    help: str


def _lifted(fn):
    return lambda *args: fn(*(oracle.lift(a) if isinstance(a, Matrix) else a for a in args))


OPS: dict[str, _Op] = {
    "add": _Op(2, (), ops.add, _lifted(oracle.exact_add), "sum of two matrices"),
    "sub": _Op(2, (), ops.sub, _lifted(oracle.exact_sub), "difference of two matrices"),
    "mul": _Op(2, (), ops.mul, _lifted(oracle.exact_mul), "matrix product"),
    "pow": _Op(1, ("exponent",), ops.pow, _lifted(oracle.exact_pow), "positive integer power"),
    "transpose": _Op(1, (), core.transpose, _lifted(oracle.exact_transpose), "transpose"),
    "det": _Op(1, (), core.determinant, _lifted(oracle.det_bareiss), "determinant"),
    "inv": _Op(1, (), core.inverse, _lifted(oracle.exact_inverse), "inverse"),
    "adj": _Op(1, (), core.adjoint, _lifted(oracle.exact_adjugate), "adjoint (adjugate)"),
    "cof": _Op(1, (), core.cofactor, _lifted(oracle.exact_cofactor), "cofactor matrix"),
    "minor": _Op(1, ("row", "col"), core.minor, _lifted(oracle.exact_minor),
                 "minor with row and column deleted (0-based indices)"),
    "is-square": _Op(1, (), core.is_square, None, "print 1 if square, else 0"),
    "is-identity": _Op(1, (), core.is_identity, None,
                       "print 1 if identity, 0 if not, 2 if not square"),
    "parse": _Op(1, (), lambda m: m, None, "validate a matrix and print '<rows> <cols>'"),
    "echo": _Op(1, (), lambda m: m, None, "print a matrix in canonical form"),
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _precision(text: str) -> int | None:
    if text == "shortest":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer or 'shortest', got {text!r}")
    if not 0 <= value <= 100:
        raise argparse.ArgumentTypeError(f"precision {value} out of range 0..100")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--check", action="store_true",
                        help="recompute exactly in rational arithmetic and fail on disagreement")
    common.add_argument("--precision", type=_precision, default=None, metavar="N",
                        help="decimal places for output, or 'shortest' (default)")

    parser = _ArgumentParser(prog="matpak", description="Matrix calculator for [[a b]-[c d]] matrices.")
    sub = parser.add_subparsers(dest="op", metavar="<op>", required=True)
    for name, spec in OPS.items():
        p = sub.add_parser(name, parents=[common], help=spec.help, description=spec.help)
        names = ["p", "q"][:spec.arity] if spec.arity == 2 else ["matrix"]
        for operand in names:
            p.add_argument(operand, help="inline matrix, @path, or - for stdin")
        for arg in spec.int_args:
            p.add_argument(arg, type=int)
    return parser


def load_operand(source: str, stdin: TextIO) -> Matrix:
    """Parse an inline matrix, ``@path`` file contents, or ``-`` (stdin)."""
    if source == "-":
        text = stdin.read()
    elif source.startswith("@"):
        path = source[1:]
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            reason = getattr(exc, "strerror", None) or str(exc)
            raise OperandIOError(f"cannot read {path!r}: {reason}") from exc
    else:
        text = source
    return parse(text)


def _check(name: str, spec: _Op, operands: list[Matrix], int_args: list[int], result) -> None:
    if spec.exact is None:
        for m in operands:
            if not oracle.compare(m, oracle.lift(m), 0.0):
                raise CheckFailed(f"{name}: operand does not lift exactly")
        return
    try:
        exact = spec.exact(*operands, *int_args)
    except MatError as exc:
        raise CheckFailed(f"{name}: exact recomputation failed ({exc})") from exc
    if isinstance(result, Matrix):
        ok = oracle.compare(result, exact, CHECK_TOLERANCE)
    else:
        ok = oracle.compare(Matrix(1, 1, [result]), oracle.RationalMatrix(1, 1, [exact]), CHECK_TOLERANCE)
    if not ok:
        raise CheckFailed(f"{name}: result differs from exact recomputation by more than {CHECK_TOLERANCE}")


def _render(name: str, result, precision: int | None) -> str:
    if name == "parse":
        return f"{result.rows} {result.cols}"
    if name == "is-square":
        return "1" if result else "0"
    if name == "is-identity":
        return str(int(result))
    if isinstance(result, Matrix):
        return serialize(result, precision)
    return format_scalar(result, precision)


def _diagnose(stderr: TextIO, kind: str, message: str) -> None:
    stderr.write(f"{kind}: {' '.join(message.split())}\n")


def run(argv: list[str], stdin: TextIO | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    """Execute one command; returns the exit status."""
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    try:
        args = build_parser().parse_args(argv)
        name = args.op
        spec = OPS[name]
        sources = [args.p, args.q] if spec.arity == 2 else [args.matrix]
        if sources.count("-") > 1:
            raise UsageError("at most one operand may be '-' (stdin)")
        int_args = [getattr(args, a) for a in spec.int_args]
    except UsageError as exc:
        _diagnose(stderr, "UsageError", str(exc))
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    operands = []
    for position, source in enumerate(sources, 1):
        try:
            operands.append(load_operand(source, stdin))
        except ParseError as exc:
            label = "stdin" if source == "-" else source if source.startswith("@") else f"operand {position}"
            _diagnose(stderr, exc.kind.value, f"{exc.message} at offset {exc.position} in {label}")
            return EXIT_PARSE_ERROR
        except OperandIOError as exc:
            _diagnose(stderr, "IOError", str(exc))
            return EXIT_MAT_ERROR

    try:
        result = spec.compute(*operands, *int_args)
        if args.check:
            _check(name, spec, operands, int_args, result)
    except MatError as exc:
        _diagnose(stderr, exc.kind.value, exc.message)
        return EXIT_MAT_ERROR
    except CheckFailed as exc:
        _diagnose(stderr, "CheckFailed", str(exc))
        return EXIT_MAT_ERROR

    stdout.write(_render(name, result, args.precision) + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
