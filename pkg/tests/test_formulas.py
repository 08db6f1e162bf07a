"""Closed-form evaluators against frozen oracle values and engine counts."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from aztec_tilings import (
    DefectSpec,
    add_gamma_squares,
    binomial_ext,
    count_ad_adjacent_defects,
    count_ar_gamma_nw_defect,
    count_ar_gamma_se_defect,
    count_ar_kept_se,
    count_ar_one_se_removed,
    count_ar_se_block_nw_defect,
    count_ar_se_block_removed,
    count_ar_se_nw_defects,
    count_aztec_diamond,
    count_tilings_dp,
    hyp_terminating,
    make_aztec_rectangle,
    remove_defects,
)
from aztec_tilings.errors import (
    InvalidParameterError,
    NonterminatingSeriesError,
    SingularParametersError,
)


def gamma_se_region(a, k, j):
    region = make_aztec_rectangle(a, a + k)
    if k >= 2:
        region = add_gamma_squares(region, k - 1, start=2)
    return remove_defects(region, [DefectSpec("SE", j)])


def gamma_nw_region(a, k, i):
    region = make_aztec_rectangle(a, a + k)
    if k >= 2:
        region = add_gamma_squares(region, k - 1, start=2)
    return remove_defects(region, [DefectSpec("NW", i)])


def test_binomial_ext_values():
    assert binomial_ext(5, 2) == 10
    assert binomial_ext(3, -1) == 0
    assert binomial_ext(-2, 2) == 3
    assert binomial_ext(-1, 3) == -1
    assert binomial_ext(0, 0) == 1


def test_hyp_terminating_values():
    assert hyp_terminating((1, 0, -3), (2, 2), 1) == 1
    assert hyp_terminating((1, -1, -2), (3, 4), 1) == Fraction(7, 6)
    assert hyp_terminating((1, -2, -1), (-1, -3), 1) == Fraction(5, 3)


def test_hyp_terminating_errors():
    with pytest.raises(NonterminatingSeriesError):
        hyp_terminating((1, 2), (3,), 1)
    with pytest.raises(SingularParametersError):
        hyp_terminating((1, -3), (-1,), 1)


def test_count_aztec_diamond():
    assert count_aztec_diamond(1) == 2
    assert count_aztec_diamond(3) == 64
    assert count_aztec_diamond(5) == 32768 == count_tilings_dp(make_aztec_rectangle(5, 5))
    with pytest.raises(InvalidParameterError):
        count_aztec_diamond(0)


def test_count_ar_kept_se():
    assert count_ar_kept_se(3, 5, (1, 2, 3)) == 2 ** 6
    assert count_ar_kept_se(2, 3, (1, 3)) == 16
    assert count_ar_kept_se(2, 4, (1, 4)) == 24
    with pytest.raises(InvalidParameterError):
        count_ar_kept_se(2, 3, (3, 1))
    with pytest.raises(InvalidParameterError):
        count_ar_kept_se(2, 3, (1, 4))


def test_count_ar_one_se_removed():
    assert count_ar_one_se_removed(2, 1) == 8
    assert count_ar_one_se_removed(2, 2) == 16
    region = remove_defects(make_aztec_rectangle(3, 4), [DefectSpec("SE", 3)])
    assert count_ar_one_se_removed(3, 3) == 192 == count_tilings_dp(region)


def test_count_ar_se_block_removed():
    assert count_ar_se_block_removed(3, 3) == 64
    assert count_ar_se_block_removed(2, 4) == 24
    removed = [DefectSpec("SE", p) for p in (2, 3, 4)]
    region = remove_defects(make_aztec_rectangle(2, 5), removed)
    assert count_ar_se_block_removed(2, 5) == 32 == count_tilings_dp(region)


def test_count_ar_gamma_se_defect_values():
    assert count_ar_gamma_se_defect(2, 1, 2) == count_ar_one_se_removed(2, 2)
    assert count_ar_gamma_se_defect(2, 2, 3) == 40
    assert count_ar_gamma_se_defect(2, 2, 4) == 24
    # defect against the gamma string: forced collapse to the diamond count
    assert count_ar_gamma_se_defect(2, 2, 2) == 8


def test_count_ar_se_nw_defects_values():
    assert count_ar_se_nw_defects(1, 1, 2) == 2
    assert count_ar_se_nw_defects(1, 2, 2) == 4
    assert count_ar_se_nw_defects(3, 2, 3) == count_ar_se_nw_defects(3, 3, 2)


def test_count_ar_se_block_nw_defect_values():
    # forced reduction to the plain diamond at the west corner
    for a, k in ((2, 1), (2, 2), (3, 3)):
        assert count_ar_se_block_nw_defect(a, k, 1) == count_aztec_diamond(a)
    assert count_ar_se_block_nw_defect(2, 1, 2) == 16


def test_count_ad_adjacent_defects_values():
    assert count_ad_adjacent_defects(2, 2, 2) == 6
    assert count_ad_adjacent_defects(1, 1, 1) == 1
    # a zero numerator parameter truncates the series at the first term
    assert count_ad_adjacent_defects(3, 1, 2) == 2 ** 3 * binomial_ext(2, 1)


@given(st.integers(1, 4), st.data())
def test_ad_adjacent_symmetry(a, data):
    i = data.draw(st.integers(1, a))
    j = data.draw(st.integers(1, a))
    assert count_ad_adjacent_defects(a, i, j) == count_ad_adjacent_defects(a, j, i)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_gamma_se_matches_engine(a, k, data):
    j = data.draw(st.integers(1, a + k))
    assert count_ar_gamma_se_defect(a, k, j) == count_tilings_dp(gamma_se_region(a, k, j))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_gamma_nw_matches_engine(a, k, data):
    i = data.draw(st.integers(1, a + k))
    assert count_ar_gamma_nw_defect(a, k, i) == count_tilings_dp(gamma_nw_region(a, k, i))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.data())
def test_formula_counts_are_nonnegative_integers(a, data):
    k = data.draw(st.integers(1, 3))
    i = data.draw(st.integers(1, a + k))
    assert count_ar_se_block_nw_defect(a, k, i) >= 0
    assert count_ar_gamma_nw_defect(a, k, i) >= 0
    j = data.draw(st.integers(1, a))
    assert count_ad_adjacent_defects(a, min(i, a), j) >= 0
