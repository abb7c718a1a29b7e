from fractions import Fraction

import pytest

from oracles import distinct_dp, partitions_brute
from subexp.errors import InvalidParametersError, UnsupportedModelError
from subexp.exact import exact_coefficients, pentagonal_oracle, product_dp
from subexp.model import (
    EXPONENTIAL,
    SELECTION,
    ModelSpec,
    custom_model,
    make_preset,
)


def test_pentagonal_small_values():
    assert pentagonal_oracle(4).coeffs == (1, 1, 2, 3, 5)
    assert pentagonal_oracle(0).coeffs == (1,)
    assert pentagonal_oracle(10)[10] == 42


def test_pentagonal_matches_brute_enumeration():
    series = pentagonal_oracle(25)
    for n in range(26):
        assert series[n] == partitions_brute(n)


def test_recurrence_standard():
    series = exact_coefficients(make_preset("standard"), 100)
    assert series[0] == 1
    assert series[10] == 42
    assert series[100] == 190569292
    pent = pentagonal_oracle(100)
    assert series.coeffs == pent.coeffs


def test_recurrence_congruent():
    series = exact_coefficients(make_preset("congruent", 2, 1), 10)
    assert series[10] == 10  # partitions of 10 into odd parts


def test_three_way_small():
    for model in (
        make_preset("standard"),
        make_preset("roots"),
        make_preset("congruent", 3, 2),
    ):
        rec = exact_coefficients(model, 60)
        dp = product_dp(model, 60)
        assert rec.coeffs == dp.coeffs
        assert all(isinstance(c, int) for c in rec.coeffs)
        assert all(c >= 0 for c in rec.coeffs)


def test_standard_monotone():
    series = exact_coefficients(make_preset("standard"), 200)
    for n in range(1, 200):
        assert series[n + 1] >= series[n]


def test_euler_identity_congruent_2_1():
    # odd-part counts equal distinct-part counts
    series = exact_coefficients(make_preset("congruent", 2, 1), 200)
    assert list(series.coeffs) == distinct_dp(200)


def test_selection_base_counts_distinct_parts():
    model = ModelSpec("distinct", SELECTION, lambda j: Fraction(1))
    series = exact_coefficients(model, 120)
    assert list(series.coeffs) == distinct_dp(120)
    assert all(isinstance(c, int) for c in series.coeffs)


def test_exponential_base_rational_coeffs():
    # f = exp(z + z^2 + ...): c_2 = 3/2, c_3 = 13/6 by hand expansion
    model = ModelSpec("sets", EXPONENTIAL, lambda j: Fraction(1))
    series = exact_coefficients(model, 3)
    assert series[0] == 1
    assert series[1] == 1
    assert series[2] == Fraction(3, 2)
    assert series[3] == Fraction(13, 6)


def test_fractional_weights_rational_path():
    model = custom_model([Fraction(1, 2), Fraction(1, 3)])
    series = exact_coefficients(model, 2)
    # Lambda_1 = 1/2, Lambda_2 = 1/4 + 1/3 = 7/12;
    # exp expansion: c_2 = Lambda_2 + Lambda_1^2/2 = 7/12 + 1/8 = 17/24
    assert series[1] == Fraction(1, 2)
    assert series[2] == Fraction(17, 24)


def test_product_dp_requires_integer_multiset():
    with pytest.raises(UnsupportedModelError):
        product_dp(custom_model([Fraction(1, 2)]), 1)
    sel = ModelSpec("distinct", SELECTION, lambda j: Fraction(1))
    with pytest.raises(UnsupportedModelError):
        product_dp(sel, 5)
    scaled = ModelSpec(
        "scaled",
        make_preset("standard").base,
        lambda j: Fraction(1),
        scale=lambda j: Fraction(1, 2),
    )
    with pytest.raises(UnsupportedModelError):
        product_dp(scaled, 5)


def test_n_zero_and_negative():
    assert exact_coefficients(make_preset("standard"), 0).coeffs == (1,)
    with pytest.raises(InvalidParametersError):
        exact_coefficients(make_preset("standard"), -1)
    with pytest.raises(InvalidParametersError):
        pentagonal_oracle(-1)
    with pytest.raises(InvalidParametersError):
        product_dp(make_preset("standard"), -1)
