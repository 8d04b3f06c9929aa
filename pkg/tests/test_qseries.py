import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mockparts.qseries import (
    BivariateSeries,
    NonInvertibleSeriesError,
    QSeries,
    dz_eval,
    eval_z,
    poch_finite,
    poch_infinite,
    series_add,
    series_inverse,
    series_mul,
)

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def q(N, terms):
    return QSeries.from_terms(N, terms)


# -- univariate ------------------------------------------------------------


def test_add_cancels():
    assert series_add(q(4, {0: 1, 1: 1}), q(4, {0: 1, 1: -1})) == q(4, {0: 2})


def test_add_zero_identity():
    a = q(6, {0: 3, 2: -1, 5: 7})
    assert series_add(a, QSeries.zero(6)) == a


def test_add_partition_series_doubled():
    p = QSeries.one(5).over_poch(1, 1, 1)
    assert series_add(p, p).coeffs == (2, 2, 4, 6, 10, 14)


def test_mul_difference_of_squares():
    assert series_mul(q(5, {0: 1, 1: 1}), q(5, {0: 1, 1: -1})) == q(5, {0: 1, 2: -1})


def test_mul_by_one_and_inverse():
    a = q(5, {0: 1, 1: -1})
    assert series_mul(a, QSeries.one(5)) == a
    assert series_mul(series_inverse(a), a) == QSeries.one(5)


def test_inverse_geometric():
    assert series_inverse(q(6, {0: 1, 1: -1})).coeffs == (1,) * 7
    assert series_inverse(QSeries.one(3)) == QSeries.one(3)


def test_inverse_euler_product():
    euler = QSeries.one(5).times_poch(1, 1, 1)
    assert series_inverse(euler).coeffs == tuple(PARTITION_NUMBERS[:6])


def test_inverse_rejects_non_unit():
    with pytest.raises(NonInvertibleSeriesError):
        series_inverse(q(4, {0: 2, 1: 1}))
    with pytest.raises(NonInvertibleSeriesError):
        series_inverse(q(4, {1: 1}))


def test_mixed_orders_take_minimum():
    assert (QSeries.one(3) + QSeries.one(7)).order == 3
    assert (QSeries.one(3) * QSeries.one(7)).order == 3


def test_coeff_count_matches_order():
    assert len(QSeries.zero(9).coeffs) == 10
    assert QSeries([1, 2, 3], order=5).coeffs == (1, 2, 3, 0, 0, 0)
    assert QSeries([1, 2, 3], order=1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        QSeries([], order=-1)


def test_str_shows_truncation():
    assert str(q(3, {0: 1, 1: -1, 3: 2})) == "1 - q + 2*q^3 + O(q^4)"


def test_shift_past_order():
    assert QSeries.one(3).shift(9) == QSeries.zero(3)


# -- Pochhammer ------------------------------------------------------------


def test_poch_finite_examples():
    assert poch_finite(0, 1, 1, 2, 1, 5).eval_z(1) == q(5, {0: 1, 1: -1})
    assert poch_finite(0, -1, 1, 2, 2, 6).eval_z(1) == q(6, {0: 1, 1: 1, 3: 1, 4: 1})
    assert poch_finite(1, 1, 3, 1, 0, 4) == BivariateSeries.one(4)


def test_poch_infinite_examples():
    N = 7
    assert poch_infinite(0, 1, N + 1, 1, N) == BivariateSeries.one(N)
    assert poch_infinite(0, -1, 1, 2, 6).eval_z(1) == q(6, {0: 1, 1: 1, 3: 1, 4: 1, 5: 1, 6: 1})
    assert poch_infinite(0, 1, 1, 1, 7).eval_z(1) == q(7, {0: 1, 1: -1, 2: -1, 5: 1, 7: 1})


def test_poch_infinite_needs_positive_start():
    with pytest.raises(ValueError):
        poch_infinite(1, 1, 0, 1, 5)


@pytest.mark.parametrize("z_exp,sign,a,c", [(0, 1, 1, 1), (1, 1, 1, 2), (1, -1, 2, 2), (2, 1, 3, 2), (1, -1, 1, 1)])
@pytest.mark.parametrize("N", [40, 200])
def test_poch_infinite_equals_enough_finite_factors(z_exp, sign, a, c, N):
    k = -(-(N - a) // c) + 1
    assert poch_infinite(z_exp, sign, a, c, N) == poch_finite(z_exp, sign, a, c, k, N)


def test_univariate_and_bivariate_poch_agree():
    N = 60
    for sign, a, step in [(1, 1, 2), (-1, 2, 2), (1, 3, 1)]:
        uni = QSeries.one(N).times_poch(sign, a, step)
        assert poch_infinite(0, sign, a, step, N).eval_z(1) == uni
        inv = QSeries.one(N).over_poch(sign, a, step)
        assert BivariateSeries.one(N).over_poch(sign, 0, a, step).eval_z(1) == inv


# -- bivariate evaluation ----------------------------------------------------


def test_dz_eval_monomials():
    assert dz_eval(BivariateSeries.monomial(5, 1, 3), 1) == q(5, {3: 1})
    assert dz_eval(BivariateSeries.monomial(5, 2, 3), 1) == q(5, {3: 2})
    assert dz_eval(BivariateSeries.monomial(5, 2, 3), -1) == q(5, {3: -2})


def test_eval_z_monomials():
    assert eval_z(BivariateSeries.monomial(4, 1, 1), 1) == q(4, {1: 1})
    assert eval_z(BivariateSeries.monomial(4, 3, 2), -1) == q(4, {2: -1})
    with pytest.raises(ValueError):
        eval_z(BivariateSeries.one(3), 2)


def test_laurent_over_factor():
    # 1 / (1 + q^2/z) = sum (-1)^j z^-j q^(2j)
    s = BivariateSeries.one(8).over_factor(1, -1, 2)
    assert s.terms() == {(-j, 2 * j): (-1) ** j for j in range(5)}


def test_chain_rule_for_inverted_argument():
    # d/dz S(-1/z) at z = 1 equals S'(-1) for a small symbolic example
    S = BivariateSeries.from_terms(6, {(0, 0): 1, (1, 1): 3, (2, 2): -2, (3, 5): 5})
    inverted = S.subs_z(-1, -1)
    assert inverted.terms() == {(0, 0): 1, (-1, 1): -3, (-2, 2): -2, (-3, 5): -5}
    assert dz_eval(inverted, 1) == dz_eval(S, -1)
    assert dz_eval(S, -1) == q(6, {1: 3, 2: 4, 5: 15})


def test_theta_pair_derivative_cancels():
    # d/dz (z^n + z^-n) at z = 1 vanishes
    theta = BivariateSeries.from_terms(9, {(0, 0): 1, (1, 1): 1, (-1, 1): 1, (2, 4): 1, (-2, 4): 1, (3, 9): 1, (-3, 9): 1})
    assert dz_eval(theta, 1) == QSeries.zero(9)
    assert eval_z(theta, 1) == q(9, {0: 1, 1: 2, 4: 2, 9: 2})


def test_z_doubling():
    s = BivariateSeries.from_terms(4, {(1, 1): 2, (2, 3): -1})
    assert s.subs_z(1, 2).terms() == {(2, 1): 2, (4, 3): -1}


def test_lift_requires_room():
    with pytest.raises(ValueError):
        BivariateSeries.one(3).lift(10, 0, 2)
    assert BivariateSeries.one(3).lift(5, 1, 2).terms() == {(1, 2): 1}


# -- properties ------------------------------------------------------------

ORDER = 12
coeff = st.integers(min_value=-5, max_value=5)
qseries = st.lists(coeff, min_size=ORDER + 1, max_size=ORDER + 1).map(lambda c: QSeries(c, ORDER))
units = st.tuples(st.sampled_from([1, -1]), st.lists(coeff, min_size=ORDER, max_size=ORDER)).map(
    lambda t: QSeries([t[0]] + t[1], ORDER)
)
bi_terms = st.dictionaries(
    st.tuples(st.integers(-3, 4), st.integers(0, 30)), st.integers(-4, 4), max_size=12
)
bivariate = bi_terms.map(lambda d: BivariateSeries.from_terms(30, d))


@given(qseries, qseries)
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(qseries, qseries, qseries)
def test_mul_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(units)
def test_inverse_is_two_sided(a):
    assert a.inverse() * a == QSeries.one(ORDER)
    assert a * series_inverse(a) == QSeries.one(ORDER)


@settings(max_examples=60, deadline=None)
@given(bivariate, bivariate)
def test_leibniz_rule(a, b):
    for z0 in (1, -1):
        lhs = dz_eval(a * b, z0)
        rhs = dz_eval(a, z0) * eval_z(b, z0) + eval_z(a, z0) * dz_eval(b, z0)
        assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(bivariate, bivariate)
def test_eval_is_a_ring_map(a, b):
    for z0 in (1, -1):
        assert eval_z(a * b, z0) == eval_z(a, z0) * eval_z(b, z0)
        assert eval_z(a + b, z0) == eval_z(a, z0) + eval_z(b, z0)


@settings(max_examples=40, deadline=None)
@given(bivariate, st.sampled_from([1, -1]), st.integers(-2, 2).filter(bool), st.integers(1, 5))
def test_over_factor_inverts_times_factor(a, s, e, x):
    assert a.times_factor(s, e, x).over_factor(s, e, x) == a


@settings(max_examples=40, deadline=None)
@given(bivariate, st.sampled_from([1, -1]), st.integers(-1, 2), st.integers(0, 3), st.integers(1, 3), st.integers(0, 6))
def test_poch_matches_factor_by_factor(a, sign, e, start, step, k):
    expect = a
    for j in range(k):
        expect = expect.times_factor(-sign, e, start + j * step)
    assert a.times_poch(sign, e, start, step, k) == expect
    if start >= 1:
        back = expect
        for j in range(k):
            back = back.over_factor(-sign, e, start + j * step)
        assert a.times_poch(sign, e, start, step, k).over_poch(sign, e, start, step, k) == back == a


@given(qseries, st.integers(0, ORDER))
def test_truncation_commutes_with_product(a, M):
    b = QSeries.one(ORDER).over_poch(1, 1, 1)
    assert (a * b).truncate(M) == a.truncate(M) * b.truncate(M)
