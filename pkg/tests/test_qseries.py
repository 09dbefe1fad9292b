import pytest
from hypothesis import given, settings, strategies as st

from quiverdt.qseries import (
    ConeViolation,
    Mono,
    NonUnitConstantTerm,
    QSeries,
    Substitution,
    binomial_factor,
    compare,
    coefficients_in_single_var,
    euler_factor,
    format_terms,
    macmahon,
    substitute,
)


def q1(order, coeffs):
    return QSeries(("q",), order, {(k,): v for k, v in coeffs.items()})


def test_geometric_series_inverse():
    one_minus_q = q1(3, {0: 1, 1: -1})
    assert coefficients_in_single_var(one_minus_q.inverse()) == [1, 1, 1, 1]
    assert coefficients_in_single_var(one_minus_q ** -1) == [1, 1, 1, 1]


def test_one_minus_q_times_geometric_is_one():
    geo = q1(6, {k: 1 for k in range(7)})
    prod = q1(6, {0: 1, 1: -1}) * geo
    assert coefficients_in_single_var(prod) == [1, 0, 0, 0, 0, 0, 0]


def test_eta_inverse_is_partition_series():
    assert coefficients_in_single_var(euler_factor(("q",), 5, power=-1)) == [1, 1, 2, 3, 5, 7]


def test_macmahon_small_coefficients():
    m = macmahon(None, 6, vars=("q",))
    assert coefficients_in_single_var(m) == [1, 1, 3, 6, 13, 24, 48]


def test_macmahon_xq_single_factor_coefficient():
    m = macmahon(Mono(1, (1, 0)), 6, vars=("x", "q"), grading=(1, 2))
    assert m.coefficient((1, 1)) == 1  # the k = 1 factor contributes x*q once


def test_macmahon_laurent_cone():
    m = macmahon(Mono(1, (-1, 0)), 8, vars=("x", "q"), grading=(1, 2))
    assert all(e[0] + e[1] >= 0 for e in m.coeffs)  # b >= a in every x^-a q^b


def test_non_unit_constant_term():
    with pytest.raises(NonUnitConstantTerm):
        q1(3, {0: 2, 1: 1}).inverse()


def test_grade_zero_monomial_cannot_invert():
    s = QSeries(("x", "q"), 4, {(0, 0): 1, (-1, 1): 1})
    with pytest.raises(ConeViolation):
        s.inverse()


def test_substitute_simple_sign():
    s = q1(2, {0: 1, 1: 1})
    sub = Substitution(("q",), ("q0", "q1"), {"q": Mono(-1, (1, 1))})
    out = substitute(sub, s)
    assert out.coefficient((1, 1)) == -1 and out.constant_term() == 1


def test_substitute_cone_violation():
    s = q1(2, {1: 1})
    with pytest.raises(ConeViolation):
        # image of q has grade 0
        substitute(Substitution(("q",), ("q0",), {"q": Mono(1, (0,))}), s)


def test_compare_reports_first_mismatch():
    m = macmahon(None, 4, vars=("q",))
    eta_inv = euler_factor(("q",), 4, power=-1)
    assert compare(m, eta_inv) == ((2,), 3, 2)
    assert compare(m, m) is None


def test_json_roundtrip():
    s = QSeries(("q0", "q1"), 4, {(1, 1): -2, (0, 0): 1})
    assert QSeries.from_json(s.to_json()) == s
    assert s.dumps() == QSeries.from_json(s.to_json()).dumps()


def test_format_terms_half_variable():
    s = QSeries(("qh",), 4, {(0,): 1, (1,): 2, (2,): 3})
    text = format_terms(s, half_vars=("qh",))
    assert "qh^1/2" in text and "qh" in text


small_series = st.builds(
    lambda coeffs: q1(4, dict(coeffs)),
    st.dictionaries(st.integers(0, 4), st.integers(-4, 4), max_size=4).map(dict.items),
)


@settings(max_examples=60, deadline=None)
@given(small_series, small_series, small_series)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.integers(1, 4), st.integers(-3, 3), max_size=3), st.integers(1, 3))
def test_pow_and_inverse_cancel(coeffs, k):
    coeffs = {0: 1, **coeffs}
    a = q1(6, coeffs)
    assert (a ** k) * (a ** -k) == QSeries.one(("q",), 6)


@settings(max_examples=40, deadline=None)
@given(small_series, small_series)
def test_substitute_is_ring_map(a, b):
    sub = Substitution(("q",), ("q0", "q1"), {"q": Mono(-1, (1, 1))})
    assert substitute(sub, a * b) == substitute(sub, a) * substitute(sub, b)
    assert substitute(sub, a + b) == substitute(sub, a) + substitute(sub, b)


def test_binomial_factor_negative_power():
    f = binomial_factor(("q",), 5, (1,), 1, -2)
    # (1-q)^-2 = sum (k+1) q^k
    assert coefficients_in_single_var(f) == [1, 2, 3, 4, 5, 6]
