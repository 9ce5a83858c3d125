import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrhom.cyclo import (
    CycloNumber,
    cyclotomic_polynomial,
    euler_phi,
    rank,
    rank_exact,
    rank_float,
    to_complex_matrix,
)
from arrhom.errors import ModeMismatch, OrderMismatch


def test_minimal_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("d", range(1, 21))
def test_product_over_divisors_is_x_d_minus_one(d):
    # independent identity: the product of Phi_e over e | d equals x^d - 1
    prod = [1]
    for e in range(1, d + 1):
        if d % e == 0:
            phi_e = cyclotomic_polynomial(e)
            out = [0] * (len(prod) + len(phi_e) - 1)
            for i, a in enumerate(prod):
                for j, b in enumerate(phi_e):
                    out[i + j] += a * b
            prod = out
    expected = [-1] + [0] * (d - 1) + [1]
    assert prod == expected


@pytest.mark.parametrize("d", range(1, 13))
def test_primitive_root_is_a_root(d):
    z = cmath.exp(2j * cmath.pi / d)
    val = sum(c * z**k for k, c in enumerate(cyclotomic_polynomial(d)))
    assert abs(val) < 1e-9


def test_mul_examples():
    w = CycloNumber.zeta(3)
    assert w * w == CycloNumber(3, (-1, -1))
    a = CycloNumber(5, (Fraction(1, 2), 3, 0, -2))
    assert a * CycloNumber.one(5) == a
    i = CycloNumber.zeta(4)
    assert i * i == CycloNumber.from_rational(4, -1)


def test_inverse_examples():
    assert CycloNumber.one(7).inverse() == CycloNumber.one(7)
    for d in (2, 3, 5, 8, 12):
        z = CycloNumber.zeta(d)
        assert z.inverse() == CycloNumber.zeta(d, d - 1)
    w = CycloNumber.zeta(3)
    a = CycloNumber.one(3) + w
    inv = a.inverse()
    assert inv == -w
    assert a * inv == CycloNumber.one(3)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycloNumber.zero(6).inverse()


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        CycloNumber.zeta(3) + CycloNumber.zeta(4)
    with pytest.raises(OrderMismatch):
        CycloNumber.zeta(3) * CycloNumber.zeta(6)


def _random_cyclo(rng, d):
    deg = euler_phi(d)
    return CycloNumber(d, [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(deg)])


@settings(max_examples=40, deadline=None)
@given(d=st.integers(min_value=1, max_value=12), seed=st.integers(min_value=0, max_value=10**6))
def test_field_axioms(d, seed):
    rng = random.Random(seed)
    a, b, c = (_random_cyclo(rng, d) for _ in range(3))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    if not a.is_zero:
        assert a * a.inverse() == CycloNumber.one(d)


@pytest.mark.parametrize("d", range(1, 13))
def test_root_of_unity_identities(d):
    z = CycloNumber.zeta(d)
    assert z**d == CycloNumber.one(d)
    for j in range(1, d):
        if d % 1 == 0:
            total = CycloNumber.zero(d)
            for i in range(d):
                total = total + CycloNumber.zeta(d, i * j)
            if j % d != 0:
                assert total.is_zero


def test_embedding_consistency():
    rng = random.Random(7)
    for d in (3, 5, 8, 12):
        a, b = _random_cyclo(rng, d), _random_cyclo(rng, d)
        assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9


# --- rank ------------------------------------------------------------------

W = CycloNumber.zeta(3)
W2 = W * W
ONE3 = CycloNumber.one(3)
ZERO3 = CycloNumber.zero(3)

# Relation matrix of the complete quadrilateral with constant order-3
# monodromy: eight point rows (two per triple point) and six chamber rows.
QUADRILATERAL_MATRIX = [
    [ONE3, ONE3, ONE3, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [W, W2, ONE3, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, ONE3, ONE3, ONE3, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, W, W2, ONE3, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, ONE3, ONE3, ONE3, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, W, W2, ONE3, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, ONE3, ONE3, ONE3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, W, W2, ONE3],
    [0, W2, 0, 0, 0, 0, 0, 0, 0, 0, 0, ONE3],
    [0, 0, ONE3, 0, 0, 0, 0, 0, 0, 0, ONE3, 0],
    [0, 0, 0, 0, 0, 0, W, 0, 0, ONE3, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, W2, 0, 0, 0, ONE3],
    [0, 0, 0, ONE3, 0, 0, 0, 0, 0, 0, W2, 0],
    [0, 0, 0, 0, ONE3, 0, 0, 0, 0, W, 0, 0],
]


def test_rank_identity():
    assert rank([[ONE3, ZERO3], [ZERO3, ONE3]]) == 2


def test_rank_quadrilateral_matrix_is_11():
    assert rank(QUADRILATERAL_MATRIX) == 11
    assert rank_float(to_complex_matrix(QUADRILATERAL_MATRIX)) == 11


def test_rank_repeated_row_invariance():
    m = QUADRILATERAL_MATRIX
    assert rank(m + [m[3]]) == rank(m)


def _random_matrix(rng, d, nrows, ncols):
    out = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            v = CycloNumber.zero(d)
            for k in range(euler_phi(d)):
                v = v + CycloNumber.zeta(d, k) * rng.randint(-2, 2)
            row.append(v)
        out.append(row)
    return out


@pytest.mark.parametrize("seed", range(6))
def test_rank_exact_matches_float(seed):
    rng = random.Random(seed)
    d = rng.choice([2, 3, 4, 5, 6, 12])
    nrows, ncols = rng.randint(1, 12), rng.randint(1, 12)
    m = _random_matrix(rng, d, nrows, ncols)
    assert rank_exact(m) == rank_float(to_complex_matrix(m))


def test_rank_exact_matches_float_30x30():
    rng = random.Random(99)
    m = _random_matrix(rng, 3, 30, 30)
    assert rank_exact(m) == rank_float(to_complex_matrix(m))


@pytest.mark.parametrize("seed", range(6))
def test_rank_transpose(seed):
    rng = random.Random(100 + seed)
    m = _random_matrix(rng, rng.choice([2, 3, 4, 6]), rng.randint(1, 10), rng.randint(1, 10))
    mt = [list(col) for col in zip(*m)]
    assert rank(m) == rank(mt)


def test_low_rank_products():
    # outer products have rank 1
    rng = random.Random(5)
    u = [_random_cyclo(rng, 6) for _ in range(8)]
    v = [_random_cyclo(rng, 6) for _ in range(9)]
    m = [[a * b for b in v] for a in u]
    if any(not a.is_zero for a in u) and any(not b.is_zero for b in v):
        assert rank(m) == 1


def test_mode_mismatch():
    with pytest.raises(ModeMismatch):
        rank([[ONE3, complex(1.0)]])


def test_empty_and_rational_matrices():
    assert rank([]) == 0
    assert rank([[Fraction(1, 2), 1], [1, 2]]) == 1
    assert rank([[0.0, 0.0]]) == 0
