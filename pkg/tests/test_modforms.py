import random
from dataclasses import replace
from fractions import Fraction

import pytest

from sigma_convolve.eisenstein import l_combination, m_series
from sigma_convolve.errors import InconsistentSystem, UnderdeterminedSystem
from sigma_convolve.modforms import (
    CUSP_DIMENSION,
    DILATIONS,
    EISENSTEIN_DIMENSION,
    KNOWN_DECOMPOSITIONS,
    Basis28,
    CoeffVector,
    decompose,
    matrix_rank,
    reconstruct,
    sturm_bound,
    verify_identity,
)
from sigma_convolve.qseries import QSeries


def test_sturm_bound_values():
    assert sturm_bound(28) == 16
    assert sturm_bound(56) == 32
    assert sturm_bound(14) == 8
    assert sturm_bound(7) == 3
    assert sturm_bound(1) == 1
    with pytest.raises(ValueError):
        sturm_bound(0)


def test_basis_construction():
    basis = Basis28.at_order(16)
    assert len(basis.eisenstein_parts) == EISENSTEIN_DIMENSION
    assert len(basis.cusp_parts) == CUSP_DIMENSION
    assert all(s.order == 16 for s in basis.columns())
    with pytest.raises(ValueError):
        Basis28.at_order(15)


def test_basis_matrix_rank_fifteen(basis300):
    rows = [[c.coeffs[n] for c in basis300.columns()] for n in range(17)]
    assert matrix_rank(rows) == 15


def test_matrix_rank_small_cases():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[1, 0], [0, 1]]) == 2
    assert matrix_rank([[Fraction(1, 2), 1], [1, 2], [3, 6]]) == 1
    assert matrix_rank([]) == 0


def test_known_decompositions_reproduced(basis300):
    for pair, known in KNOWN_DECOMPOSITIONS.items():
        target = l_combination(pair[0], pair[1], 300) ** 2
        got = decompose(target, basis300, 16)
        assert got == known, pair
        assert reconstruct(got, basis300).equal_up_to(target, 300), pair


def test_decompose_overconstrained_agrees(basis300):
    target = l_combination(1, 28, 300) ** 2
    assert decompose(target, basis300, 16) == decompose(target, basis300, 100)


def test_decompose_spot_anchors(basis300):
    vec = decompose(l_combination(1, 28, 300) ** 2, basis300, 16)
    assert vec.x[1] == Fraction(118, 125)
    assert vec.x[2] == Fraction(-21, 125)
    assert vec.y[2] == 252
    vec = decompose(l_combination(2, 7, 300) ** 2, basis300, 16)
    assert vec.x[1] == Fraction(-14, 125)
    assert vec.y[1] == Fraction(-4608, 25)


def test_sparse_cusp_support(basis300):
    # the level-14 and level-7 targets use only the first few generators
    supports = {
        (1, 14): {2, 3, 4},
        (2, 7): {2, 3, 4},
        (1, 7): {1, 2},
    }
    for pair, expected in supports.items():
        vec = decompose(l_combination(pair[0], pair[1], 300) ** 2, basis300, 16)
        assert {j + 1 for j, v in enumerate(vec.y) if v != 0} == expected, pair


def test_decompose_basis_element(basis300):
    vec = decompose(basis300.eisenstein_parts[1], basis300, 16)
    assert vec.x == {1: 0, 2: 1, 4: 0, 7: 0, 14: 0, 28: 0}
    assert all(v == 0 for v in vec.y)


def test_decompose_reconstruct_round_trip(basis300):
    rng = random.Random(8128)
    for _ in range(5):
        vec = CoeffVector.make(
            {t: Fraction(rng.randint(-99, 99), rng.randint(1, 20)) for t in DILATIONS},
            [Fraction(rng.randint(-99, 99), rng.randint(1, 20)) for _ in range(9)],
        )
        series = reconstruct(vec, basis300)
        assert decompose(series, basis300, 16) == vec
        assert decompose(series, basis300, 40) == vec


def test_decompose_preconditions(basis300):
    target = m_series(300)
    with pytest.raises(ValueError):
        decompose(target, basis300, 15)
    with pytest.raises(ValueError):
        decompose(m_series(20), basis300, 30)


def test_decompose_inconsistent(basis300):
    target = m_series(300) + QSeries.monomial(16, 300)
    with pytest.raises(InconsistentSystem):
        decompose(target, basis300, 16)


def test_decompose_underdetermined(basis300):
    doctored = replace(
        basis300, cusp_parts=basis300.cusp_parts[:8] + (basis300.cusp_parts[7],)
    )
    with pytest.raises(UnderdeterminedSystem):
        decompose(m_series(300), doctored, 16)


def test_coeff_vector_validation():
    with pytest.raises(ValueError):
        CoeffVector.make({1: 1}, [0] * 9)
    with pytest.raises(ValueError):
        CoeffVector.make(dict.fromkeys(DILATIONS, 0), [0] * 8)


def test_verify_identity():
    m = m_series(20)
    assert verify_identity(m, m, 28)
    bumped = m + QSeries.monomial(17, 20)
    assert verify_identity(m, bumped, 28)  # agreement below the bound suffices
    assert not m.equal_up_to(bumped, 17)
    assert not verify_identity(m, m + QSeries.monomial(3, 20), 28)
    with pytest.raises(ValueError):
        verify_identity(m_series(10), m_series(10), 28)


def test_known_decompositions_shape():
    assert set(KNOWN_DECOMPOSITIONS) == {(1, 28), (4, 7), (1, 14), (2, 7), (1, 7)}
    for vec in KNOWN_DECOMPOSITIONS.values():
        assert tuple(vec.x) == DILATIONS
        assert len(vec.y) == 9
