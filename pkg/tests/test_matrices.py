import json
from fractions import Fraction

import pytest

from degenmat import matrices as mx
from degenmat import sequences as nb
from degenmat.errors import NonUnitDiagonal, SizeMismatch, ZeroDenominator
from degenmat.ring import LAMBDA, MU, ONE, X, Y, ZERO, as_poly, parse_poly

# the order-4 example worked out in the source, one row per line
P4 = [
    ["1"],
    ["x", "1"],
    ["x^2 - x*lambda", "2*x", "1"],
    ["x^3 - 3*x^2*lambda + 2*x*lambda^2", "3*x^2 - 3*x*lambda", "3*x", "1"],
]
G_FACTORS = {
    4: P4[:2] + [["x^2 - x*lambda", "x", "1"], ["x^3 - 3*x^2*lambda + 2*x*lambda^2", "x^2 - 2*x*lambda", "x", "1"]],
    3: [["1"], ["0", "1"], ["0", "x", "1"], ["0", "x^2 - x*lambda", "x", "1"]],
    2: [["1"], ["0", "1"], ["0", "0", "1"], ["0", "0", "x", "1"]],
    1: [["1"], ["0", "1"], ["0", "0", "1"], ["0", "0", "0", "1"]],
}


def tri(rows):
    return mx.LowerTri([[parse_poly(c) for c in row] for row in rows])


def test_pascal_example():
    assert mx.pascal(4, LAMBDA, X) == tri(P4)
    assert mx.pascal(4, LAMBDA, X)[4, 2] == parse_poly("3*x^2 - 3*x*lambda")


@pytest.mark.parametrize("k", [4, 3, 2, 1])
def test_example_factors(k):
    assert mx.g_factor(4, k, LAMBDA, X) == tri(G_FACTORS[k])


def test_example_product():
    assert mx.g_product(4, LAMBDA, X) == tri(P4)


def test_pascal_basics():
    assert mx.mat_inv(mx.pascal(3, LAMBDA, X)) == mx.pascal(3, LAMBDA, -X)
    assert mx.pascal(5, LAMBDA, 0) == mx.identity(5)
    assert mx.pascal(3, 0, 2) == mx.LowerTri([[1], [2, 1], [4, 4, 1]])
    assert mx.mat_mul(mx.pascal(4, LAMBDA, X), mx.pascal(4, LAMBDA, Y)) == mx.pascal(4, LAMBDA, X + Y)
    assert mx.mat_pow(mx.pascal(4, LAMBDA, X), 0) == mx.identity(4)
    assert mx.mat_pow(mx.pascal(4, LAMBDA, X), 3) == mx.pascal(4, LAMBDA, 3 * X)


def test_pascal_bar():
    bar = mx.pascal_bar(3, LAMBDA, X)
    assert bar == mx.direct_sum(mx.LowerTri([[1]]), mx.pascal(3, LAMBDA, X))
    assert bar.n == 4 and bar[2, 1] == ZERO and bar[3, 2] == X


def test_r_and_t():
    assert mx.t_matrix(3, LAMBDA, X)[3, 1] == LAMBDA * X
    assert mx.t_matrix(3, 1, 2)[3, 1] == as_poly(2)
    r = mx.r_matrix(6, Fraction(1, 2), 3)
    assert mx.mat_mul(r, mx.t_matrix(6, Fraction(1, 2), 3)) == mx.identity(6)
    assert r == mx.r_matrix_literal(6, Fraction(1, 2), 3)
    assert all(d == ONE for d in mx.r_matrix(5, LAMBDA, X).diagonal())
    assert mx.mat_inv(mx.t_matrix(5, LAMBDA, X)) == mx.r_matrix(5, LAMBDA, X)


def test_r_zero_denominator():
    # (x − λ|λ)_1 = x − λ vanishes at x = λ
    with pytest.raises(ZeroDenominator):
        mx.r_matrix(3, LAMBDA, LAMBDA)
    with pytest.raises(ZeroDenominator):
        mx.r_matrix_literal(3, 1, 1)


def test_factorizations():
    for n in range(1, 6):
        p = mx.pascal(n, LAMBDA, X)
        assert mx.g_product(n, LAMBDA, X) == p
        assert mx.g_product(n, LAMBDA, X, via_t=True) == p
        assert mx.q_factor(n, n, LAMBDA, X) == p
        s = mx.stirling_matrix_first_type(n, (MU, LAMBDA, 0), 2)
        assert mx.q_product(n, LAMBDA, MU - LAMBDA) == s


def test_bernoulli_matrices():
    assert mx.bernoulli_matrix(3, 0, LAMBDA, X) == mx.pascal(3, LAMBDA, X)
    for n in range(1, 5):
        for w, z in [(1, 1), (1, -1), (2, -1)]:
            lhs = mx.mat_mul(mx.bernoulli_matrix(n, w, LAMBDA, X), mx.bernoulli_matrix(n, z, LAMBDA, Y))
            assert lhs == mx.bernoulli_matrix(n, w + z, LAMBDA, X + Y)
    assert mx.mat_inv(mx.bernoulli_matrix(4, 1, LAMBDA, X)) == mx.bernoulli_matrix(4, -1, LAMBDA, -X)


def test_l_matrix_zero_order_is_pascal_with_unit_step():
    assert mx.l_matrix(4, 0, LAMBDA, X) == mx.pascal(4, 1, X)


def test_stirling_first_type():
    for n in range(1, 6):
        big = mx.stirling_matrix_first_type(n, (1, LAMBDA, X), 2)
        small = mx.stirling_matrix_first_type(n, (1, LAMBDA, X), 1)
        assert mx.mat_mul(big, small) == mx.identity(n)
        assert all(d == ONE for d in big.diagonal())
    s = mx.stirling_matrix_first_type(5, (MU, 0, 0), 2)
    for i in range(1, 6):
        for j in range(1, i + 1):
            assert s[i, j] == MU ** (i - j) * nb.stirling2(i, j)


def test_stirling_second_type():
    for n in range(1, 6):
        g = mx.stirling_matrix_second_type(n, 0, LAMBDA, X, 1)
        G = mx.stirling_matrix_second_type(n, 0, LAMBDA, X, 2)
        assert mx.mat_mul(g, G) == mx.identity(n)
        lhs = mx.mat_mul(
            mx.stirling_matrix_second_type(n, 0, LAMBDA, -X, 2),
            mx.stirling_matrix_second_type(n, 0, LAMBDA, -Y, 1),
        )
        assert lhs == mx.pascal(n, LAMBDA, X - Y)
    assert all(d == ONE for d in mx.stirling_matrix_second_type(4, 2, LAMBDA, X, 2).diagonal())


def test_errors():
    with pytest.raises(SizeMismatch):
        mx.mat_mul(mx.identity(2), mx.identity(3))
    with pytest.raises(NonUnitDiagonal):
        mx.mat_inv(mx.LowerTri([[2], [0, 1]]))


def test_serialization_roundtrip():
    m = mx.bernoulli_matrix(4, 2, LAMBDA, X)
    data = json.loads(json.dumps(m.to_json()))
    assert mx.LowerTri.from_json(data) == m
    lines = m.to_csv().strip().splitlines()
    assert len(lines) == 4
