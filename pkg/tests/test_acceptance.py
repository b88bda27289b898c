"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary."""
import io
import itertools
import math
import random
import struct

import pytest

from matpak import (
    IdentityVerdict,
    MatError,
    MatErrorKind,
    Matrix,
    ParseError,
    ParseErrorKind,
    RationalMatrix,
    add,
    adjoint,
    det_bareiss,
    det_leibniz,
    determinant,
    exact_adjugate,
    inverse,
    is_identity,
    lift,
    minor,
    mul,
    parse,
    pow,
    serialize,
    sub,
    transpose,
)
from matpak.cli import run
from matpak.oracle import exact_mul, exact_pow

from conftest import M, PAPER_DET_4X4, PAPER_MINOR_5X6

SEED = 0x5EED


def int_matrix(rng, n, lo, hi):
    return M([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def identity(n):
    return M([[float(i == j) for j in range(n)] for i in range(n)])


def max_norm(a, b):
    return max(abs(x - y) for x, y in zip(a.data, b.data))


@pytest.mark.criterion("1 determinant fixtures (-8, 322) exact in core, Leibniz and Bareiss")
def test_c1_determinant_fixtures():
    for grid, expected in (([[2, 5], [4, 6]], -8), (PAPER_DET_4X4, 322)):
        m = M(grid)
        assert determinant(m) == expected
        assert det_leibniz(lift(m)) == expected
        assert det_bareiss(lift(m)) == expected


@pytest.mark.criterion("2 transpose/addition/subtraction/minor examples reproduce printed outputs")
def test_c2_paper_example_fixtures():
    assert transpose(M([[2, 5], [3, 4], [4, 3], [5, 2]])).to_list() == [[2, 3, 4, 5], [5, 4, 3, 2]]
    assert transpose(M([[2, 7, 5, 1, 5], [2, 8, 4, 1, 2], [4, 9, 3, 4, 6], [6, 5, 2, 4, 4]])).to_list() == [
        [2, 2, 4, 6], [7, 8, 9, 5], [5, 4, 3, 2], [1, 1, 4, 4], [5, 2, 6, 4],
    ]
    p = M([[2, 5, 2, 4], [3, 4, 2, 6], [4, 3, 1, 5], [5, 2, 1, 3]])
    assert add(p, M([[5, 2, 2, 4], [4, 3, 6, 2], [3, 4, 1, 5], [2, 5, 3, 3]])).to_list() == [
        [7, 7, 4, 8], [7, 7, 8, 8], [7, 7, 2, 10], [7, 7, 4, 6],
    ]
    assert sub(p, M([[2, 2, 4, 2], [4, 3, 6, 2], [4, 3, 5, 1], [2, 5, 3, 1]])).to_list() == [
        [0, 3, -2, 2], [-1, 1, -4, 4], [0, 0, -4, 4], [3, -3, -2, 2],
    ]
    m = M(PAPER_MINOR_5X6)
    printed = {
        (0, 0): [[9, 3, 4, 9, 4], [1, 1, 8, 1, 1], [5, 6, 5, 2, 7], [5, 1, 3, 8, 7]],
        (4, 0): [[7, 3, 2, 3, 8], [9, 3, 4, 9, 4], [1, 1, 8, 1, 1], [5, 6, 5, 2, 7]],
        (2, 2): [[2, 7, 2, 3, 8], [4, 9, 4, 9, 4], [6, 5, 5, 2, 7], [8, 5, 3, 8, 7]],
    }
    for (i, j), expected in printed.items():
        assert minor(m, i, j).to_list() == expected


PRINTED_PRODUCT = [[20, 64, 63, 19], [31, 84, 91, 38], [36, 96, 109, 45]]
PRINTED_CUBE = [[841, 1317, 421], [873, 1333, 406], [345, 984, 314]]
PRINTED_SQUARE = [[68, 95, 27], [61, 102, 30], [45, 72, 31]]


def diff_positions(a, b):
    return {(i, j) for i, row in enumerate(a) for j, x in enumerate(row) if x != b[i][j]}


@pytest.mark.criterion("3 multiplication and power discrepancies resolved by the oracle")
def test_c3_discrepancy_ledger():
    p, q = M([[2, 7], [5, 8], [6, 9]]), M([[3, 4, 7, 6], [2, 8, 7, 1]])
    product = mul(p, q)
    assert product.to_list() == exact_mul(lift(p), lift(q)).to_list()
    # printed (3,3) entry 109; 6*7 + 9*7 = 105
    assert diff_positions(product.to_list(), PRINTED_PRODUCT) == {(2, 2)}

    a = M([[3, 7, 4], [5, 8, 1], [6, 3, 2]])
    assert pow(a, 2).to_list() == exact_pow(lift(a), 2).to_list()
    # printed square has 95 at (1,2); 3*7 + 7*8 + 4*3 = 89
    assert diff_positions(pow(a, 2).to_list(), PRINTED_SQUARE) == {(0, 1)}
    cube = pow(a, 3)
    assert cube.to_list() == exact_pow(lift(a), 3).to_list()
    assert cube.to_list() == [[811, 1269, 415], [873, 1333, 406], [681, 984, 314]]
    # printed 841, 1317, 421 in row 1 and 345 at (3,1) inherit the slip
    assert diff_positions(cube.to_list(), PRINTED_CUBE) == {(0, 0), (0, 1), (0, 2), (2, 0)}


@pytest.mark.criterion("4 A*adj(A) = det(A)*I: exact in oracle, <=1e-6 in float core (1000 cases)")
def test_c4_adjugate_identity():
    rng = random.Random(SEED + 4)
    for _ in range(1000):
        n = rng.randint(2, 5)
        m = int_matrix(rng, n, -9, 9)
        exact = lift(m)
        det_exact = det_bareiss(exact)
        scaled = RationalMatrix(n, n, [det_exact * (i == j) for i in range(n) for j in range(n)])
        assert exact_mul(exact, exact_adjugate(exact)) == scaled
        det = determinant(m)
        target = M([[det * (i == j) for j in range(n)] for i in range(n)])
        assert max_norm(mul(m, adjoint(m)), target) <= 1e-6


@pytest.mark.criterion("5 determinant triple agreement (10^4 n<=4 in {-2..2}; 100 n=6)")
def test_c5_determinant_triple_agreement():
    rng = random.Random(SEED + 5)
    for _ in range(10_000):
        n = rng.randint(1, 4)
        m = int_matrix(rng, n, -2, 2)
        core_det = determinant(m)
        leibniz = det_leibniz(lift(m))
        assert core_det == leibniz == det_bareiss(lift(m))
    for _ in range(100):
        m = int_matrix(rng, 6, -9, 9)
        assert determinant(m) == det_leibniz(lift(m)) == det_bareiss(lift(m))


@pytest.mark.criterion("6 A*inverse(A) within 1e-6 of I (500 cases); det=0 -> Singular")
def test_c6_inverse_identity():
    rng = random.Random(SEED + 6)
    checked = 0
    while checked < 500:
        n = rng.randint(1, 5)
        m = int_matrix(rng, n, -9, 9)
        if abs(det_bareiss(lift(m))) < 1:
            continue
        assert max_norm(mul(m, inverse(m)), identity(n)) <= 1e-6
        checked += 1
    singular = 0
    while singular < 100:
        n = rng.randint(2, 5)
        m = int_matrix(rng, n, -2, 2)
        if det_bareiss(lift(m)) != 0:
            continue
        with pytest.raises(MatError) as err:
            inverse(m)
        assert err.value.kind is MatErrorKind.SINGULAR
        singular += 1


def random_scalar(rng):
    kind = rng.randrange(5)
    if kind == 0:
        return float(rng.randint(-1000, 1000))
    if kind == 1:
        return rng.uniform(-1, 1)
    if kind == 2:
        return rng.uniform(-1, 1) * 10.0 ** rng.randint(-300, 300)
    if kind == 3:
        return struct.unpack("<d", struct.pack("<Q", rng.getrandbits(64)))[0]
    return -rng.random() * 1e-5


MALFORMED = {
    "[[1 2]-[3]]": ParseErrorKind.RAGGED_ROWS,
    "[[1 x]]": ParseErrorKind.INVALID_NUMBER,
    "[[1 2 3]-[4 5 6 z]]": ParseErrorKind.INVALID_NUMBER,
    "[]": ParseErrorKind.EMPTY_MATRIX,
    "": ParseErrorKind.EMPTY_MATRIX,
    "[[]]": ParseErrorKind.EMPTY_ROW,
    "[[1 2]": ParseErrorKind.UNBALANCED_BRACKETS,
    "[[1]]]": ParseErrorKind.UNBALANCED_BRACKETS,
    "[[1]] trailing": ParseErrorKind.TRAILING_GARBAGE,
}


@pytest.mark.criterion("7 codec: 10^4 bit-exact round trips, canonical fixed point, malformed kinds")
def test_c7_codec_round_trip():
    rng = random.Random(SEED + 7)
    saw_negative = saw_exponent = False
    for _ in range(10_000):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        vals = []
        while len(vals) < r * c:
            x = random_scalar(rng)
            if math.isfinite(x):
                vals.append(x)
        m = Matrix(r, c, vals)
        text = serialize(m)
        back = parse(text)
        assert [struct.pack("<d", x) for x in back.data] == [struct.pack("<d", x) for x in m.data]
        assert serialize(back) == text
        saw_negative |= "-" in text.replace("]-[", "")
        saw_exponent |= "e" in text
    assert saw_negative and saw_exponent
    for text, kind in MALFORMED.items():
        with pytest.raises(ParseError) as err:
            parse(text)
        assert err.value.kind is kind
        assert 0 <= err.value.position <= len(text)


@pytest.mark.criterion("8 is_identity classification and exhaustive minor index-shift check")
def test_c8_formal_semantics():
    for n in range(1, 9):
        assert is_identity(identity(n)) is IdentityVerdict.IDENTITY
    for n in range(1, 6):
        for perm in itertools.permutations(range(n)):
            pm = M([[float(perm[i] == j) for j in range(n)] for i in range(n)])
            expected = IdentityVerdict.IDENTITY if perm == tuple(range(n)) else IdentityVerdict.NOT_IDENTITY
            assert is_identity(pm) is expected
    for r, c in itertools.product(range(1, 9), repeat=2):
        if r != c:
            assert is_identity(M([[1.0] * c for _ in range(r)])) is IdentityVerdict.NOT_SQUARE
    for r, c in itertools.product(range(2, 6), repeat=2):
        grid = [[100 * i + j for j in range(c)] for i in range(r)]
        for i, j in itertools.product(range(r), range(c)):
            deleted = [[x for k, x in enumerate(row) if k != j] for k2, row in enumerate(grid) if k2 != i]
            assert minor(M(grid), i, j).to_list() == deleted


def invoke(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.criterion("9 CLI examples byte-for-byte; 500 fuzzed argv -> exit codes in {0,1,2,3}")
def test_c9_cli_end_to_end():
    assert invoke(["det", "[[2 5]-[4 6]]"]) == (0, "-8\n", "")
    assert invoke(["add", "[[1]]", "[[2]]"]) == (0, "[[3]]\n", "")
    assert invoke(["inv", "[[1 2]-[2 4]]"]) == (1, "", "Singular: determinant below threshold\n")
    assert invoke(["minor", "[[1 2]-[3 4]]", "0", "0"]) == (0, "[[4]]\n", "")

    rng = random.Random(SEED + 9)
    ops_ = ["add", "sub", "mul", "pow", "transpose", "det", "inv", "adj", "cof", "minor",
            "is-square", "is-identity", "parse", "echo", "nope"]
    pool = ["[[1]]", "[[2 5]-[4 6]]", "[[1 2]-[2 4]]", "[[1 2 3]]", "[[-1 2.5e3]-[3 -4]]", "[[1 x]]",
            "[]", "[[1 2]-[3]]", "-", "@no/such/file", "--check", "--precision", "2", "0", "1", "3",
            "-1", "", "[[1e308 1e308]-[1e308 1e308]]", "--bogus"]
    for _ in range(500):
        argv = [rng.choice(ops_)] + [rng.choice(pool) for _ in range(rng.randint(0, 4))]
        code, _, err = invoke(argv, stdin=rng.choice(["[[2]]", "bad", ""]))
        assert code in {0, 1, 2, 3}
        if code:
            assert err.count("\n") == 1
