"""Tests for exact truncated series arithmetic and product expansion."""

import random

import pytest

from partrec.series import (
    Factor,
    Series,
    expand_product,
    phi_series,
    psi_series,
    theta_series,
)

EULER = [Factor(1, 0, -1, 1)]  # prod (1 - x^k)


def _p_series(order):
    """Partition generating series via inversion of prod (1-x^k)."""
    return expand_product(EULER, order).inverse()


def _random_series(rng, order, unit=False):
    coeffs = [rng.randint(-9, 9) for _ in range(order + 1)]
    if unit:
        coeffs[0] = rng.choice((1, -1))
    return Series(coeffs)


# ----------------------------------------------------------------------
# addition
# ----------------------------------------------------------------------

def test_add_cancellation():
    assert Series([1, 1]) + Series([1, -1]) == Series([2, 0])


def test_add_zero_is_identity():
    a = Series([3, -1, 4, 1, -5])
    assert a + Series.zero(4) == a


def test_add_p_and_p_neg_doubles_even_values():
    p = _p_series(6)
    total = p + p.subs_neg()
    assert total.coeffs == (2, 0, 4, 0, 10, 0, 22)


def test_binary_ops_truncate_to_min_order():
    a = Series([1, 2, 3, 4, 5])
    b = Series([1, 1])
    assert (a + b).order == 1
    assert (a - b).order == 1
    assert (a * b).order == 1


# ----------------------------------------------------------------------
# multiplication
# ----------------------------------------------------------------------

def test_mul_binomials():
    assert Series([1, 1]) * Series([1, -1]) == Series([1, 0])
    assert (Series([1, 1, 0]) * Series([1, -1, 0])).coeffs == (1, 0, -1)


def test_p_times_euler_product_is_one():
    p = _p_series(10)
    assert p * expand_product(EULER, 10) == Series.one(10)


def test_p_squared_counts_two_color_pairs():
    p = _p_series(4)
    assert (p * p)[2] == 5


def test_scalar_multiplication():
    a = Series([1, -2, 3])
    assert 2 * a == Series([2, -4, 6])
    assert a * -1 == -a


# ----------------------------------------------------------------------
# inversion
# ----------------------------------------------------------------------

def test_inverse_of_euler_product_gives_partition_counts():
    assert expand_product(EULER, 7).inverse().coeffs == (1, 1, 2, 3, 5, 7, 11, 15)


def test_inverse_of_one_is_one():
    assert Series.one(5).inverse() == Series.one(5)


def test_inverse_of_p_gives_pentagonal_signs():
    assert _p_series(12).inverse().coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)


def test_inverse_requires_unit_constant_term():
    with pytest.raises(ValueError, match="non-invertible series"):
        Series([2, 1]).inverse()
    with pytest.raises(ValueError, match="non-invertible series"):
        Series([0, 1]).inverse()


def test_inverse_roundtrip_on_random_unit_series():
    rng = random.Random(91)
    for _ in range(100):
        order = rng.randint(0, 48)
        a = _random_series(rng, order, unit=True)
        assert a * a.inverse() == Series.one(order)


# ----------------------------------------------------------------------
# substitutions
# ----------------------------------------------------------------------

def test_subs_neg_negates_odd_coefficients():
    assert Series([1, 1, 2]).subs_neg() == Series([1, -1, 2])


def test_subs_neg_is_involution():
    rng = random.Random(92)
    for _ in range(25):
        a = _random_series(rng, rng.randint(0, 40))
        assert a.subs_neg().subs_neg() == a


def test_phi_at_neg_x():
    assert phi_series(16).subs_neg().coeffs == (
        1, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 2)


def test_subs_power_spreads_coefficients():
    assert Series([1, 1]).subs_power(2) == Series([1, 0])
    assert Series([1, 1, 0]).subs_power(2).coeffs == (1, 0, 1)


def test_subs_power_one_is_identity():
    a = Series([5, 4, 3])
    assert a.subs_power(1) is a


def test_p_of_x_squared_coefficient():
    assert _p_series(4).subs_power(2)[4] == 2


def test_subs_power_rejects_nonpositive():
    with pytest.raises(ValueError):
        Series([1]).subs_power(0)


# ----------------------------------------------------------------------
# parity projections
# ----------------------------------------------------------------------

def test_even_part_zeroes_odd_coefficients():
    assert Series([1, 1, 2]).even_part() == Series([1, 0, 2])


def test_odd_part_of_p():
    odd = _p_series(5).odd_part()
    assert (odd[1], odd[3], odd[5]) == (1, 3, 7)


def test_even_part_of_odd_series_is_zero():
    assert Series([0, 3, 0, -2]).even_part() == Series.zero(3)


def test_projections_are_projections_and_split():
    rng = random.Random(93)
    for _ in range(25):
        a = _random_series(rng, rng.randint(0, 40))
        even = a.even_part()
        assert even.even_part() == even
        assert even + a.odd_part() == a


# ----------------------------------------------------------------------
# ring axioms on random small series
# ----------------------------------------------------------------------

def test_ring_axioms_on_random_series():
    rng = random.Random(90)
    for _ in range(50):
        order = rng.randint(0, 64)
        a = _random_series(rng, order)
        b = _random_series(rng, order)
        c = _random_series(rng, order)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


# ----------------------------------------------------------------------
# expand_product
# ----------------------------------------------------------------------

def test_expand_euler_product_gives_pentagonal_series():
    assert expand_product(EULER, 12).coeffs == (
        1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)


def test_expand_distinct_odd_product():
    got = expand_product([Factor(2, -1, 1, 1)], 10)
    assert got.coeffs == (1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2)


def test_expand_empty_product_is_one():
    assert expand_product([], 6) == Series.one(6)


def test_expand_skips_factors_beyond_order():
    assert expand_product([Factor(1, 50, 1, 1)], 10) == Series.one(10)


def test_expand_negative_power_inverts():
    got = expand_product([Factor(1, 0, -1, -1)], 7)
    assert got.coeffs == (1, 1, 2, 3, 5, 7, 11, 15)


def test_expand_rejects_malformed_factor():
    with pytest.raises(ValueError, match="malformed factor"):
        expand_product([Factor(1, -1, 1, 1)], 5)  # smallest exponent 0
    with pytest.raises(ValueError, match="malformed factor"):
        expand_product([Factor(0, 1, 1, 1)], 5)
    with pytest.raises(ValueError, match="malformed factor"):
        expand_product([Factor(1, 0, 2, 1)], 5)
    with pytest.raises(ValueError, match="malformed factor"):
        expand_product([Factor(1, 0, 1, 0)], 5)


def test_expand_rejects_negative_order():
    with pytest.raises(ValueError):
        expand_product(EULER, -1)


def test_phi_product_form_matches_theta_at_200():
    product = expand_product([Factor(2, -1, 1, 2), Factor(2, 0, -1, 1)], 200)
    assert product == phi_series(200)


def test_psi_product_form_matches_theta_at_200():
    product = expand_product([Factor(2, 0, -1, 1), Factor(2, -1, -1, -1)], 200)
    assert product == psi_series(200)


# ----------------------------------------------------------------------
# theta_series
# ----------------------------------------------------------------------

def test_psi_theta_terms():
    assert psi_series(10).coeffs == (1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1)


def test_phi_theta_terms():
    assert phi_series(9).coeffs == (1, 2, 0, 0, 2, 0, 0, 0, 0, 2)


def test_theta_empty_stream_is_zero():
    assert theta_series([], 5) == Series.zero(5)


def test_theta_merges_duplicate_exponents():
    assert theta_series([(2, 1), (2, 3), (4, -1)], 4).coeffs == (0, 0, 4, 0, -1)


def test_theta_clips_beyond_order():
    assert theta_series([(0, 1), (99, 5)], 3) == Series.one(3)


def test_theta_rejects_negative_exponent():
    with pytest.raises(ValueError):
        theta_series([(-1, 1)], 3)


# ----------------------------------------------------------------------
# misc surface
# ----------------------------------------------------------------------

def test_series_is_immutable_and_hashable():
    a = Series([1, 2, 3])
    assert isinstance(a.coeffs, tuple)
    assert hash(a) == hash(Series([1, 2, 3]))


def test_shifted():
    a = Series([1, 2, 3])
    assert a.shifted(1).coeffs == (0, 1, 2)
    assert a.shifted(5) == Series.zero(2)
    with pytest.raises(ValueError):
        a.shifted(-1)


def test_truncated():
    a = Series([1, 2, 3])
    assert a.truncated(1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        a.truncated(9)


def test_getitem_rejects_negative_index():
    with pytest.raises(IndexError):
        Series([1, 2])[-1]
