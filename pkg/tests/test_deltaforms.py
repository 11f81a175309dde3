import pytest

from sigma_convolve.convolution import w_brute, w_formula
from sigma_convolve.deltaforms import (
    CUBE_BRACKET_LEVEL,
    CUBE_BRACKET_TERMS,
    TauTables,
    cube_bracket,
    delta_4_7_cuberoot,
    delta_4_7_eta,
    delta_4_14,
    w_1_14_royer,
    w_1_7_lemire,
)
from sigma_convolve.eta import EtaQuotientSpec, c_series, ligozat_check


def test_cube_bracket_leading_term():
    bracket = cube_bracket(12)
    assert bracket.valuation() == 3
    assert bracket.coefficient(3) == 1


def test_bracket_products_are_weight_twelve_forms():
    for _, exps in CUBE_BRACKET_TERMS:
        report = ligozat_check(EtaQuotientSpec(CUBE_BRACKET_LEVEL, exps))
        assert report.is_modular and report.weight_k == 12, exps


def test_cuberoot_leading_coefficients():
    root = delta_4_7_cuberoot(10)
    assert root.coefficient(0) == 0
    assert root.coefficient(1) == 1
    assert root.coefficient(2) == c_series(1, 4).coefficient(2) + 4 * c_series(2, 4).coefficient(2)
    with pytest.raises(ValueError):
        delta_4_7_cuberoot(2)


def test_cuberoot_equals_eta_combination():
    assert delta_4_7_cuberoot(100) == delta_4_7_eta(100)


def test_cuberoot_cubes_back_to_bracket():
    root = delta_4_7_cuberoot(80)
    assert (root ** 3).equal_up_to(cube_bracket(80), 80)


def test_delta_4_7_eta_values():
    series = delta_4_7_eta(6)
    assert series.coefficient(1) == 1
    assert series.coefficient(2) == -1  # c1(2) + 4 c2(2) = -5 + 4


def test_delta_4_14_values():
    d1 = delta_4_14(1, 8)
    d2 = delta_4_14(2, 8)
    assert d1.coefficient(0) == 0 and d2.coefficient(0) == 0
    assert d1.coefficient(1) == 1
    assert d2.coefficient(1) == 1
    with pytest.raises(ValueError):
        delta_4_14(3, 8)


def test_tau_tables_zero_extension():
    taus = TauTables.at_order(20)
    assert taus.t47(0) == 0 and taus.t4141(-2) == 0
    assert taus.t47(1) == 1
    assert taus.t4141(1) == 1 and taus.t4142(1) == 1


def test_royer_formula_examples():
    taus = TauTables.at_order(40)
    assert w_1_14_royer(15, taus) == 1
    assert w_1_14_royer(1, taus) == 0
    with pytest.raises(ValueError):
        w_1_14_royer(0, taus)


def test_royer_matches_brute_force():
    taus = TauTables.at_order(200)
    for n in range(1, 201):
        assert w_1_14_royer(n, taus) == w_brute(1, 14, n), n


def test_lemire_formula_examples():
    u = delta_4_7_cuberoot(40)
    assert w_1_7_lemire(8, u) == 1
    assert w_1_7_lemire(1, u) == 0
    with pytest.raises(ValueError):
        w_1_7_lemire(0, u)


def test_lemire_matches_brute_and_closed_form(cusp1000):
    u = delta_4_7_cuberoot(300)
    for n in range(1, 301):
        value = w_1_7_lemire(n, u)
        assert value == w_brute(1, 7, n), n
        assert value == w_formula((1, 7), n, cusp1000), n


def test_shared_caches_grow():
    import sigma_convolve.deltaforms as deltaforms

    deltaforms._tau_tables = None
    deltaforms._u_series = None
    try:
        assert w_1_14_royer(15) == 1
        assert w_1_7_lemire(8) == 1
        first = deltaforms._tau_tables
        w_1_14_royer(first.order + 10)
        assert deltaforms._tau_tables.order > first.order
    finally:
        deltaforms._tau_tables = None
        deltaforms._u_series = None
