"""Moment vectors, chart solving, multiplication/splitting, translation."""

from fractions import Fraction

import pytest

from slicelab.errors import NotInOpenLocus
from slicelab.field import RatFunc
from slicelab.gauss import SlicePoint
from slicelab.ihr import (act, chi_alpha, in_nalpha_group, multiply,
                          phi_alpha, shift_point, split_F,
                          translation_matrix, xi_alpha, zeta_alpha)
from slicelab.matrix import MatQt
from slicelab.sampling import SplitMix64, sample_zastava
from slicelab.zastava import CorootInterval, ZastavaPoint, translate, \
    zastava_to_matrix

from conftest import R

T = RatFunc.t()
A11 = CorootInterval(1, 1, 2)
A12 = CorootInterval(1, 2, 3)


def Z(alpha, p, e, b=(), g=()):
    return ZastavaPoint(alpha, Fraction(p), Fraction(e),
                        tuple(Fraction(x) for x in b),
                        tuple(Fraction(x) for x in g))


def test_phi_on_basic_chart_point():
    y = zastava_to_matrix(Z(A11, 0, 1))
    assert phi_alpha(y, A11).values == (1,)


def test_phi_reads_chart_coordinates():
    rng = SplitMix64(21)
    for n in (2, 3, 4):
        for alpha in CorootInterval.all_intervals(n):
            z = sample_zastava(alpha, bound=7, rng=rng)
            y = zastava_to_matrix(z)
            assert phi_alpha(y, alpha).values == z.b + (z.e,)


def test_phi_vanishes_on_shift_points():
    y = shift_point((1, 0, -1))
    assert phi_alpha(y, A12).values == (0, 0)


def test_zeta_second_mode_oracle():
    # U12 of the chart point (p=2, e=3) is 3/(t-2) = 3/t + 6/t^2 + ...
    entry = R([3], [-2, 1])
    assert entry.series_coeff(1) == 3
    assert entry.series_coeff(2) == 6
    y = zastava_to_matrix(Z(A11, 2, 3))
    assert y.gauss.U[0][1] == entry
    assert zeta_alpha(y, A11).values == (6,)


def test_zeta_at_chart_origin():
    assert zeta_alpha(zastava_to_matrix(Z(A11, 0, 1)), A11).values == (0,)


def test_zeta_reads_chart_coordinates():
    rng = SplitMix64(22)
    for n in (2, 3, 4):
        for alpha in CorootInterval.all_intervals(n):
            k = alpha.k
            z = sample_zastava(alpha, bound=7, rng=rng)
            expect = tuple(z.g[k - i - 1] * z.e for i in range(1, k)) + \
                (z.p * z.e + z.e * sum((bb * gg for bb, gg
                                        in zip(z.b, z.g)), Fraction(0)),)
            assert zeta_alpha(zastava_to_matrix(z), alpha).values == expect


def test_xi_on_explicit_unipotent():
    y = SlicePoint.from_matrix(MatQt([[1, T ** -1], [0, 1]]), (0, 0))
    assert xi_alpha(y, A11) == Z(A11, 0, 1)


def test_xi_inverts_the_chart():
    rng = SplitMix64(23)
    for n in (2, 3, 4):
        for alpha in CorootInterval.all_intervals(n):
            z = sample_zastava(alpha, bound=7, rng=rng)
            assert xi_alpha(zastava_to_matrix(z), alpha) == z


def test_xi_needs_invertible_last_phi():
    with pytest.raises(NotInOpenLocus):
        xi_alpha(shift_point((-1, 1)), A11)


def test_multiply_chart_by_shift():
    y = multiply(zastava_to_matrix(Z(A11, 0, 1)), shift_point((1, -1)))
    assert y.x == MatQt([[1, T ** -1], [0, 1]])
    assert y.mu == (0, 0)


def test_multiply_by_identity_point():
    y = zastava_to_matrix(Z(A12, 2, 3, (1,), (-1,)))
    assert multiply(y, shift_point((0, 0, 0))) == y


def test_multiply_two_chart_points():
    y = multiply(zastava_to_matrix(Z(A11, 0, 1)),
                 zastava_to_matrix(Z(A11, 1, 1)))
    assert y.mu == (-2, 2)
    assert phi_alpha(y, A11).values == (1,)


def test_multiply_shift_adds_coweight():
    rng = SplitMix64(24)
    for alpha in CorootInterval.all_intervals(3):
        y = zastava_to_matrix(sample_zastava(alpha, bound=5, rng=rng))
        shifted = multiply(y, shift_point((2, 0, -1)))
        assert shifted.mu == tuple(m + s for m, s
                                   in zip(y.mu, (2, 0, -1)))


def test_split_explicit_example():
    y = SlicePoint.from_matrix(MatQt([[1, T ** -1], [0, 1]]), (0, 0))
    pair = split_F(y, A11)
    assert pair.zastava == Z(A11, 0, 1)
    assert pair.rest.x == MatQt.t_power((1, -1))
    assert pair.rest.mu == (1, -1)


def test_split_of_chart_point_gives_identity_rest():
    z = Z(A12, 1, 2, (3,), (4,))
    pair = split_F(zastava_to_matrix(z), A12)
    assert pair.zastava == z
    assert pair.rest.x == MatQt.identity(3)
    assert pair.rest.mu == (0, 0, 0)


def test_split_needs_open_locus():
    with pytest.raises(NotInOpenLocus):
        split_F(shift_point((-1, 1)), A11)


def test_split_then_multiply_is_identity():
    rng = SplitMix64(25)
    z = sample_zastava(A12, bound=4, rng=rng)
    rest = shift_point((1, 1, -2))
    y = multiply(zastava_to_matrix(z), rest)
    pair = split_F(y, A12)
    assert pair.zastava == z and pair.rest == rest
    assert multiply(zastava_to_matrix(pair.zastava), pair.rest) == y


def test_translation_matrix_shape():
    v1, v2 = Fraction(5), Fraction(-7)
    assert translation_matrix((v1,), A11) == MatQt([[1, 0], [-5, 1]])
    assert translation_matrix((v1, v2), A12) == \
        MatQt([[1, 0, 0], [0, 1, 0], [7, -5, 1]])
    # embedding off the leading block
    alpha = CorootInterval(2, 2, 3)
    assert translation_matrix((v1,), alpha) == \
        MatQt([[1, 0, 0], [0, 1, 0], [0, -5, 1]])


def test_act_matches_coordinate_translation():
    rng = SplitMix64(26)
    for alpha in (A11, A12, CorootInterval(2, 3, 4)):
        z = sample_zastava(alpha, bound=5, rng=rng)
        v = tuple(Fraction(rng.randint(-5, 5)) for _ in range(alpha.k))
        assert act(v, zastava_to_matrix(z), alpha) == \
            zastava_to_matrix(translate(z, v))


def test_act_zero_fixes_everything():
    y = zastava_to_matrix(Z(A12, 1, 2, (3,), (4,)))
    assert act((Fraction(0), Fraction(0)), y, A12) == y


def test_act_shifts_p_on_k1_chart():
    y = zastava_to_matrix(Z(A11, 0, 1))
    moved = act((Fraction(3),), y, A11)
    assert moved == zastava_to_matrix(Z(A11, 3, 1))


def test_chi_values():
    assert chi_alpha(A11).values == (1,)
    assert chi_alpha(CorootInterval(1, 3, 4)).values == (0, 0, 1)
    assert chi_alpha(A12) == phi_alpha(
        zastava_to_matrix(Z(A12, 0, 1, (0,), (0,))), A12)


def test_shift_point_values():
    assert shift_point((0, 0)).x == MatQt.identity(2)
    assert shift_point((1, -1)).x == MatQt.t_power((1, -1))
    assert shift_point((1, -1)).mu == (1, -1)


def test_nalpha_group_membership_predicate():
    # entry (1,3) lies outside the rows-and-columns {2,3} block
    u = MatQt([[1, 0, T], [0, 1, 0], [0, 0, 1]])
    assert in_nalpha_group(u, CorootInterval(1, 1, 3))
    assert in_nalpha_group(u, CorootInterval(2, 2, 3))
    # entry (2,3) is interior to that block
    u2 = MatQt([[1, 0, 0], [0, 1, T], [0, 0, 1]])
    assert not in_nalpha_group(u2, CorootInterval(2, 2, 3))
    assert in_nalpha_group(u2, CorootInterval(1, 1, 3))
    assert not in_nalpha_group(MatQt([[1, T ** -1, 0], [0, 1, 0],
                                      [0, 0, 1]]),
                               CorootInterval(2, 2, 3))      # not polynomial


def test_translation_conjugation_preserves_nalpha():
    rng = SplitMix64(27)
    from slicelab.sampling import random_nalpha_group
    for alpha in CorootInterval.all_intervals(4):
        u = random_nalpha_group(alpha, rng)
        v = tuple(Fraction(rng.randint(-5, 5)) for _ in range(alpha.k))
        tv = translation_matrix(v, alpha)
        assert in_nalpha_group(tv @ u @ tv.inv(), alpha)


def test_moment_vector_json():
    mv = phi_alpha(zastava_to_matrix(Z(A11, 0, 1)), A11)
    assert mv.to_json() == {"alpha": {"r1": 1, "r2": 1, "n": 2},
                            "values": ["1"]}


def test_split_pair_json():
    pair = split_F(zastava_to_matrix(Z(A11, 2, 3)), A11)
    doc = pair.to_json()
    assert set(doc) == {"zastava", "rest"}
    assert doc["zastava"]["p"] == "2"
    assert doc["rest"]["mu"] == [0, 0]
