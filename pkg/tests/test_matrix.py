"""Matrices over Q(t): products, inverses, determinants, clearing."""

import pytest

from slicelab.errors import SingularMatrix
from slicelab.field import Poly, RatFunc
from slicelab.matrix import MatQt
from slicelab.sampling import SplitMix64

from conftest import P, R

T = RatFunc.t()


def test_identity_product():
    x = MatQt([[1, T], [T ** -1, 0]])
    assert MatQt.identity(2) @ x == x
    assert x @ MatQt.identity(2) == x


def test_hand_product_2x2():
    a = MatQt([[0, 1], [-1, T]])
    b = MatQt([[T, -1], [1, 0]])
    assert a @ b == MatQt.identity(2)


def test_diagonal_t_powers_cancel():
    assert MatQt.t_power((1, -1)) @ MatQt.t_power((-1, 1)) == MatQt.identity(2)


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        MatQt.identity(2) @ MatQt.identity(3)
    with pytest.raises(ValueError):
        MatQt([[1, 2]])


def test_inverse_by_adjugate_oracle():
    # det = 1, so inv([[0,1],[-1,t]]) is the adjugate [[t,-1],[1,0]]
    x = MatQt([[0, 1], [-1, T]])
    assert x.inv() == MatQt([[T, -1], [1, 0]])
    assert x.inv() @ x == MatQt.identity(2)


def test_inverse_identity():
    assert MatQt.identity(3).inv() == MatQt.identity(3)


def test_singular_matrix_raises():
    with pytest.raises(SingularMatrix):
        MatQt([[1, 1], [1, 1]]).inv()


def _naive_det(m: MatQt) -> RatFunc:
    """Cofactor expansion oracle, exponential but fine for n <= 4."""
    n = m.n
    if n == 1:
        return m[0][0]
    total = RatFunc.zero()
    rest = [row[1:] for row in m.rows]
    sign = 1
    for i in range(n):
        minor = [rest[r] for r in range(n) if r != i]
        total = total + RatFunc.constant(sign) * m[i][0] * _naive_det(MatQt(minor))
        sign = -sign
    return total


def test_det_matches_cofactor_expansion():
    rng = SplitMix64(4096)
    for n in (2, 3, 4):
        for _ in range(10):
            m = MatQt([[R([rng.randint(-4, 4), rng.randint(-2, 2)])
                        for _ in range(n)] for _ in range(n)])
            assert m.det() == _naive_det(m)


def test_random_inverse_roundtrip():
    rng = SplitMix64(12)
    done = 0
    while done < 20:
        m = MatQt([[R([rng.randint(-4, 4), rng.randint(-1, 1)])
                    for _ in range(3)] for _ in range(3)])
        if not m.det():
            continue
        assert m @ m.inv() == MatQt.identity(3)
        done += 1


def test_cleared_returns_polynomial_representative():
    x = MatQt([[R([1], [0, 1]), 1], [T, R([1], [-2, 1])]])
    cleared, scalar = x.cleared()
    assert cleared.is_polynomial()
    assert scalar == P(0, -2, 1)  # lcm of t and t-2
    for i in range(2):
        for j in range(2):
            assert cleared[i][j] == x[i][j] * RatFunc(scalar, Poly.one())


def test_matrix_json_roundtrip():
    x = MatQt([[0, 1], [-1, T]])
    assert MatQt.from_json(x.to_json()) == x
