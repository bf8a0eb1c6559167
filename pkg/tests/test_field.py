"""Exact arithmetic in Q(t) and expansion at infinity.

Derived expectations are recomputed here with independent oracles
(schoolbook long division, geometric series, Cauchy convolution) rather
than trusted from the implementation.
"""

import math
from fractions import Fraction

import pytest

from slicelab.errors import DivisionByZero
from slicelab.field import Poly, RatFunc, poly_gcd, rf
from slicelab.sampling import SplitMix64

from conftest import P, R


# ---------------------------------------------------------------------------
# polynomials

def test_poly_normalization_strips_trailing_zeros():
    assert P(1, 2, 0, 0) == P(1, 2)
    assert P(0).degree == -1
    assert P().degree == -1
    assert P(0, 0, 3).degree == 2


def test_poly_divmod_means_euclidean_division():
    a, b = P(1, 0, 0, 1), P(-1, 1)           # t^3 + 1, t - 1
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_poly_division_by_zero():
    with pytest.raises(DivisionByZero):
        divmod(P(1), P())


def test_poly_gcd_is_monic():
    a = P(-1, 0, 1)        # (t-1)(t+1)
    b = P(-1, 1) * P(3)    # 3(t-1)
    assert poly_gcd(a, b) == P(-1, 1)


def test_poly_evaluation_horner():
    p = P(2, -3, 1)        # t^2 - 3t + 2
    assert p(Fraction(1)) == 0
    assert p(Fraction(5)) == 12


# ---------------------------------------------------------------------------
# rational function field operations, frozen examples

def test_add_common_denominator_identity():
    # 1/(t-1) + 1/(t+1) = 2t/(t^2-1)
    f = R([1], [-1, 1])
    g = R([1], [1, 1])
    assert f + g == R([0, 2], [-1, 0, 1])


def test_mul_inverse_pair(t):
    assert t * t.reciprocal() == RatFunc.one()


def test_div_factor_cancellation():
    assert R([-1, 0, 1]) / R([-1, 1]) == R([1, 1])


def test_division_by_zero_rejected(t):
    with pytest.raises(DivisionByZero):
        t / RatFunc.zero()
    with pytest.raises(DivisionByZero):
        RatFunc(P(1), P())


def test_normalization_coprime_monic_denominator():
    f = RatFunc(P(0, 2), P(0, 0, 4))      # 2t / 4t^2
    assert f.num == P(Fraction(1, 2)) and f.den == P(0, 1)
    assert f.den.lc == 1


# ---------------------------------------------------------------------------
# order at infinity

def test_ord_inf_examples(t):
    assert R([1, 1], [0, 0, 1]).ord_inf() == 1       # (t+1)/t^2
    assert (t ** 3).ord_inf() == -3
    assert RatFunc.zero().ord_inf() == math.inf


def test_ord_inf_multiplicative():
    rng = SplitMix64(2024)
    for _ in range(100):
        f = _random_ratfunc(rng)
        g = _random_ratfunc(rng)
        if f and g:
            assert (f * g).ord_inf() == f.ord_inf() + g.ord_inf()


# ---------------------------------------------------------------------------
# polynomial part

def _long_division_quotient(num: Poly, den: Poly) -> Poly:
    """Independent oracle: repeated leading-term elimination."""
    q = Poly.zero()
    r = num
    while r.degree >= den.degree:
        shift = r.degree - den.degree
        c = r.lc / den.lc
        mono = Poly([0] * shift + [c])
        q = q + mono
        r = r - mono * den
    return q


def test_poly_part_examples(t):
    assert R([1, 0, 1], [0, 1]).poly_part() == P(0, 1)        # (t^2+1)/t -> t
    assert R([1], [-1, 1]).poly_part() == Poly.zero()
    # t^3/(t-1): oracle gives t^2 + t + 1 with remainder 1
    num, den = P(0, 0, 0, 1), P(-1, 1)
    assert _long_division_quotient(num, den) == P(1, 1, 1)
    assert RatFunc(num, den).poly_part() == P(1, 1, 1)


def test_poly_part_characterization():
    rng = SplitMix64(77)
    for _ in range(50):
        f = _random_ratfunc(rng)
        q = f.poly_part()
        assert (f - rf(q)).ord_inf() >= 1


# ---------------------------------------------------------------------------
# series coefficients at infinity

def test_series_coeff_geometric():
    # 1/(t-2) = sum 2^(m-1) t^-m; coefficient of t^-3 is 4
    f = R([1], [-2, 1])
    for j in range(1, 9):
        assert f.series_coeff(j) == Fraction(2) ** (j - 1)
    assert f.series_coeff(0) == 0


def test_series_coeff_monomial(t):
    assert t.series_coeff(-1) == 1
    assert t.series_coeff(0) == 0
    assert t.series_coeff(1) == 0


def test_series_reconstruction_to_order_12():
    rng = SplitMix64(5150)
    for _ in range(40):
        f = _random_ratfunc(rng)
        approx = rf(f.poly_part())
        tinv = RatFunc(P(1), P(0, 1))
        for j in range(1, 13):
            approx = approx + rf(f.series_coeff(j)) * tinv ** j
        assert (f - approx).ord_inf() >= 13


def test_series_of_product_is_cauchy_convolution():
    """series(f*g, j) = sum_i series(f, i) * series(g, j - i) whenever both
    factors are bounded at infinity (ord >= 0)."""
    rng = SplitMix64(31337)
    checked = 0
    while checked < 100:
        f = _random_ratfunc(rng)
        g = _random_ratfunc(rng)
        if f.ord_inf() < 0 or g.ord_inf() < 0:
            continue
        prod = f * g
        for j in range(0, 9):
            conv = sum((f.series_coeff(i) * g.series_coeff(j - i)
                        for i in range(0, j + 1)), start=Fraction(0))
            assert prod.series_coeff(j) == conv
        checked += 1


# ---------------------------------------------------------------------------
# field axioms on random triples

def _random_ratfunc(rng: SplitMix64) -> RatFunc:
    def poly():
        deg = rng.randint(0, 3)
        return Poly([Fraction(rng.randint(-9, 9)) for _ in range(deg + 1)])

    den = poly()
    while not den:
        den = poly()
    return RatFunc(poly(), den)


def test_field_axioms_on_random_triples():
    rng = SplitMix64(99)
    for _ in range(200):
        f, g, h = (_random_ratfunc(rng) for _ in range(3))
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f - f == RatFunc.zero()
        if h:
            assert (f / h) * h == f


def test_pow_negative_exponent(t):
    assert t ** -2 == (t * t).reciprocal()
    assert (t + RatFunc.one()) ** 0 == RatFunc.one()


# ---------------------------------------------------------------------------
# JSON round trips

def test_rational_json_uses_slash_form():
    from slicelab.field import rational_from_json, rational_to_json
    assert rational_to_json(Fraction(3, 4)) == "3/4"
    assert rational_to_json(Fraction(-5)) == "-5"
    assert rational_from_json("7/2") == Fraction(7, 2)
    assert rational_from_json(3) == Fraction(3)


def test_ratfunc_json_roundtrip():
    f = R([1, 0, 3], [-2, 1])
    assert RatFunc.from_json(f.to_json()) == f
    assert f.to_json() == {"num": ["1", "0", "3"], "den": ["-2", "1"]}


def test_poly_json_is_ascending_array():
    p = P(Fraction(1, 2), 0, -3)
    assert p.to_json() == ["1/2", "0", "-3"]
    assert Poly.from_json(p.to_json()) == p
