from fractions import Fraction

import pytest

from sigma_convolve.errors import FractionalExponent, NegativeValuation, OutOfRange
from sigma_convolve.eta import (
    CUSP_GENERATORS,
    CuspTable,
    EtaQuotientSpec,
    c_series,
    cusp_spec,
    eta_factor,
    expand,
    ligozat_check,
)
from sigma_convolve.modforms import matrix_rank
from sigma_convolve.qseries import QSeries


def naive_product_body(delta: int, r: int, order: int) -> QSeries:
    """Test-local oracle: multiply the (1 - q^(delta*n)) factors directly."""
    acc = QSeries.one(order)
    for n in range(1, order // delta + 1):
        acc = acc * (QSeries.one(order) - QSeries.monomial(delta * n, order))
    return acc ** abs(r) if r >= 0 else (acc ** (-r)).inverse()


def test_spec_validation():
    with pytest.raises(ValueError):
        EtaQuotientSpec(28, {3: 1})
    with pytest.raises(ValueError):
        EtaQuotientSpec(0, {1: 1})
    with pytest.raises(ValueError):
        EtaQuotientSpec(28, {1: 0})
    spec = EtaQuotientSpec(28, {1: 5, 2: 0, 7: 5, 14: -10})
    assert dict(spec.exponents) == {1: 5, 7: 5, 14: -10}


def test_spec_from_string():
    spec = EtaQuotientSpec.from_string(28, "1:5,2:-1,7:5,14:-1")
    assert spec == cusp_spec(1)
    with pytest.raises(ValueError):
        EtaQuotientSpec.from_string(28, "1:5,1:2")
    with pytest.raises(ValueError):
        EtaQuotientSpec.from_string(28, "1-5")
    with pytest.raises(ValueError):
        EtaQuotientSpec.from_string(28, "1:x")
    with pytest.raises(ValueError):
        EtaQuotientSpec.from_string(28, "")


def test_eta_factor_examples():
    f = eta_factor(1, 1, 3)
    assert f.offset24 == 1
    assert f.body.coeffs == (1, -1, -1, 0)
    assert eta_factor(1, 24, 2).body.coeffs == (1, -24, 252)
    assert eta_factor(7, 1, 6).body == QSeries.one(6)


def test_eta_factor_against_naive_product():
    for delta in (1, 2, 7):
        for r in (1, 2, -1, 5):
            got = eta_factor(delta, r, 25).body
            assert got == naive_product_body(delta, r, 25), (delta, r)


def test_expand_examples():
    c1 = expand(cusp_spec(1), 8)
    assert c1.coefficient(0) == 0 and c1.coefficient(1) == 1
    c2 = expand(cusp_spec(2), 8)
    assert c2.coefficient(1) == 0 and c2.coefficient(2) == 1
    with pytest.raises(FractionalExponent):
        expand(EtaQuotientSpec(1, {1: 1}), 5)
    with pytest.raises(NegativeValuation):
        expand(EtaQuotientSpec(1, {1: -24}), 5)


def test_expand_is_multiplicative_on_exponents():
    # {1:24} times {2:24} = {1:24, 2:24}, each side expandable on its own
    a = expand(EtaQuotientSpec(2, {1: 24}), 30)
    b = expand(EtaQuotientSpec(2, {2: 24}), 30)
    both = expand(EtaQuotientSpec(2, {1: 24, 2: 24}), 30)
    assert a * b == both


def test_ligozat_nine_generators():
    for j in range(1, 10):
        report = ligozat_check(cusp_spec(j))
        assert report.weight_k == 4, j
        assert report.is_modular and report.is_cusp, j


def test_ligozat_level_one_examples():
    report = ligozat_check(EtaQuotientSpec(1, {1: 24}))
    assert report.is_cusp and report.weight_k == 12
    assert report.s_value == 1 and report.cusp_orders == {1: 24}
    report = ligozat_check(EtaQuotientSpec(1, {1: 2}))
    assert not report.cond_i and not report.is_modular


def test_ligozat_fields_are_exact():
    report = ligozat_check(cusp_spec(1))
    # s = 1^5 * 2^-1 * 7^5 * 14^-1 = 7^4 * (2^2)^-1... kept exact as a fraction
    assert report.s_value == Fraction(2401, 4)
    assert report.cond_v  # 2401/4 = (49/2)^2
    assert set(report.cusp_orders) == {1, 2, 4, 7, 14, 28}


def test_ligozat_condition_v_odd_exponent():
    # s = 2: not a rational square, everything else satisfied or not is moot
    report = ligozat_check(EtaQuotientSpec(2, {2: 1, 1: -1}))
    assert not report.cond_v


def test_generator_leading_terms():
    for j, exps in CUSP_GENERATORS.items():
        series = c_series(j, 20)
        lead = sum(d * r for d, r in exps.items()) // 24
        assert series.valuation() == lead, j
        assert series.coefficient(lead) == 1, j


def test_known_generator_coefficients():
    assert c_series(1, 4).coeffs[:3] == (0, 1, -5)
    assert c_series(3, 4).coeffs[:4] == (0, 0, 0, 1)
    assert c_series(4, 4).coeffs[:3] == (0, 1, 2)
    assert c_series(5, 6).valuation() == 5
    assert c_series(9, 10).valuation() == 9


def test_generator_coefficients_are_integers():
    for j in range(1, 10):
        assert all(isinstance(c, int) for c in c_series(j, 60).coeffs), j


def test_cusp_matrix_rank_nine():
    rows = [[c_series(j, 16).coefficient(n) for j in range(1, 10)] for n in range(1, 17)]
    assert matrix_rank(rows) == 9


def test_c_series_cache_consistency():
    big = c_series(2, 120)
    small = c_series(2, 40)
    assert big.truncate(40) == small
    fresh = expand(cusp_spec(2), 40)
    assert fresh == small


def test_cusp_table():
    table = CuspTable(50)
    assert table.c(1, 1) == 1 and table.c(1, 2) == -5
    assert table.c(3, 0) == 0 and table.c(5, -4) == 0
    assert table.series(9).valuation() == 9
    with pytest.raises(OutOfRange):
        table.c(1, 51)
    with pytest.raises(ValueError):
        table.c(10, 1)
    with pytest.raises(ValueError):
        CuspTable(0)
