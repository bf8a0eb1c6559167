from fractions import Fraction

import pytest

from slicelab.field import Poly, RatFunc


@pytest.fixture
def t():
    return RatFunc.t()


def P(*coeffs) -> Poly:
    """Polynomial from ascending integer/Fraction coefficients."""
    return Poly([Fraction(c) for c in coeffs])


def R(num, den=1) -> RatFunc:
    """Rational function from coefficient lists or scalars."""
    np = num if isinstance(num, Poly) else P(*num) if isinstance(num, (list, tuple)) else P(num)
    dp = den if isinstance(den, Poly) else P(*den) if isinstance(den, (list, tuple)) else P(den)
    return RatFunc(np, dp)
