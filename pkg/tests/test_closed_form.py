"""Closed-form factor entries, Gamma-product identities, determinant, chain."""

from fractions import Fraction

import pytest

from cauchylu import (
    DomainError,
    ExactMatrix,
    RationalFunction,
    SYMBOLIC_T,
    SingularEntry,
    T,
    build_L,
    build_U,
    build_matrix,
    chain_t1,
    det_closed,
    det_cofactor,
    det_elimination,
    det_t1,
    entry_L,
    entry_U,
    gamma_identity_left,
    gamma_identity_right,
    lu_doolittle,
)
from cauchylu.closed_form import ChainValues

# Frozen against the elimination oracle (test_det_t1_matches_live_oracle
# recomputes it here).
DET_T1_S4 = Fraction(137438953472, 189827962198875)


# -- entry_L -----------------------------------------------------------------


@pytest.mark.parametrize("i", [1, 2, 5, 12])
def test_entry_L_diagonal_is_one(i):
    assert entry_L(i, i, SYMBOLIC_T) == 1
    assert entry_L(i, i, Fraction(3, 7)) == 1


def test_entry_L_subdiagonal_symbolic():
    assert entry_L(2, 1, SYMBOLIC_T) == RationalFunction(T**2 - 4, 9 * T**2 - 4)


def test_entry_L_matches_doolittle():
    factors = lu_doolittle(build_matrix(2, SYMBOLIC_T))
    assert entry_L(2, 1, SYMBOLIC_T) == factors.L.at(2, 1)


def test_entry_L_vanishes_above_diagonal():
    assert entry_L(1, 2, SYMBOLIC_T) == 0
    assert entry_L(1, 2, Fraction(1)) == 0


def test_entry_L_triangularity_grid():
    for i in range(1, 13):
        for j in range(i + 1, 13):
            assert entry_L(i, j, SYMBOLIC_T) == 0


def test_entry_L_singular_at_denominator_root():
    # i=2, j=1: denominator factor 9t^2 - 4 vanishes at t = 2/3
    with pytest.raises(SingularEntry) as info:
        entry_L(2, 1, Fraction(2, 3))
    assert info.value.positions == [(2, 1)]


def test_entry_L_zero_numerator_is_fine():
    # t = 2 zeroes the numerator factor (j=1, k=1) but no denominator factor
    assert entry_L(2, 1, Fraction(2)) == 0


def test_entry_L_rejects_bad_indices():
    with pytest.raises(DomainError):
        entry_L(0, 1, SYMBOLIC_T)


# -- entry_U -----------------------------------------------------------------


def test_entry_U_top_left_symbolic():
    value = entry_U(1, 1, SYMBOLIC_T)
    assert value == RationalFunction(1, 4 - T**2)
    assert str(value) == "(-1)/(t^2 - 4)"
    assert value == build_matrix(1, SYMBOLIC_T).at(1, 1)


def test_entry_U_first_row_equals_matrix_row():
    for l in range(1, 6):
        assert entry_U(1, l, SYMBOLIC_T) == build_matrix(5, SYMBOLIC_T).at(1, l)


def test_entry_U_second_diagonal_at_t_one():
    assert entry_U(2, 2, 1) == Fraction(32, 175)


def test_entry_U_vanishes_below_diagonal():
    assert entry_U(2, 1, SYMBOLIC_T) == 0
    assert entry_U(2, 1, Fraction(1)) == 0


def test_entry_U_triangularity_grid():
    for j in range(1, 13):
        for l in range(1, j):
            assert entry_U(j, l, SYMBOLIC_T) == 0


def test_entry_U_singular_first_product():
    with pytest.raises(SingularEntry):
        entry_U(1, 1, Fraction(2))


def test_entry_U_singular_second_product():
    # j=2, l=2: factor (2j-1)^2 t^2 - 4 of the second product vanishes at 2/3
    with pytest.raises(SingularEntry) as info:
        entry_U(2, 2, Fraction(2, 3))
    assert "second product" in str(info.value)


# -- assembled factors ---------------------------------------------------------


def test_build_L_size_one():
    assert build_L(1, SYMBOLIC_T) == ExactMatrix([[1]])
    assert build_L(1, Fraction(5, 9)) == ExactMatrix([[1]])


def test_build_L_size_two_symbolic():
    expected = ExactMatrix(
        [
            [RationalFunction(1), RationalFunction(0)],
            [RationalFunction(T**2 - 4, 9 * T**2 - 4), RationalFunction(1)],
        ]
    )
    assert build_L(2, SYMBOLIC_T) == expected


def test_build_U_size_one_symbolic():
    assert build_U(1, SYMBOLIC_T) == ExactMatrix([[RationalFunction(1, 4 - T**2)]])


def test_factors_multiply_to_matrix_numeric():
    for s in (1, 2, 3, 4):
        product = build_L(s, 1) @ build_U(s, 1)
        assert product == build_matrix(s, 1)


def test_factors_match_doolittle_small_symbolic():
    for s in (1, 2, 3):
        factors = lu_doolittle(build_matrix(s, SYMBOLIC_T))
        assert build_L(s, SYMBOLIC_T) == factors.L
        assert build_U(s, SYMBOLIC_T) == factors.U


# -- Gamma identities -----------------------------------------------------------


def test_gamma_left_base_case():
    lhs, rhs = gamma_identity_left(1, 1)
    assert lhs == T**2 - 4
    assert rhs == T**2 - 4


def test_gamma_left_two_two():
    lhs, rhs = gamma_identity_left(2, 2)
    assert lhs == (9 * T**2 - 4) * (9 * T**2 - 16)
    assert lhs == rhs


def test_gamma_left_degree_count():
    for i in range(1, 5):
        for j in range(1, 5):
            lhs, rhs = gamma_identity_left(i, j)
            assert lhs.den == 1 and rhs.den == 1
            assert lhs.num.degree == 2 * j
            assert rhs.num.degree == 2 * j


def test_gamma_right_base_cases():
    lhs, rhs = gamma_identity_right(1, 1)
    assert lhs == T**2 - 4 and rhs == T**2 - 4
    lhs, rhs = gamma_identity_right(1, 2)
    assert lhs == T**2 - 16 and rhs == T**2 - 16


def test_gamma_right_rhs_normalizes_to_polynomial():
    for j in range(1, 5):
        for l in range(1, 5):
            _, rhs = gamma_identity_right(j, l)
            assert rhs.den == 1


# -- determinant and chain --------------------------------------------------------


def test_det_closed_empty_product():
    assert det_closed(0, 1) == 1
    assert det_closed(0, SYMBOLIC_T) == 1


def test_det_closed_values_at_t_one():
    assert det_closed(1, 1) == Fraction(1, 3)
    assert det_closed(2, 1) == Fraction(32, 525)
    assert det_closed(2, 1) == det_cofactor(build_matrix(2, 1))


def test_det_closed_symbolic_matches_elimination():
    for s in (1, 2, 3):
        assert det_closed(s, SYMBOLIC_T) == det_elimination(build_matrix(s, SYMBOLIC_T))


def test_det_closed_rejects_negative_size():
    with pytest.raises(DomainError):
        det_closed(-1, 1)


@pytest.mark.parametrize(
    "s, expected",
    [
        (1, Fraction(1, 3)),
        (2, Fraction(32, 525)),
        (3, Fraction(524288, 68762925)),
    ],
)
def test_chain_values(s, expected):
    chain = chain_t1(s)
    assert chain.all_equal
    assert chain.values == (expected,) * 6


def test_chain_values_are_six_independent_fields():
    chain = chain_t1(4)
    assert len(chain.values) == 6
    assert chain.all_equal
    assert chain.first_disagreement() is None


def test_chain_first_disagreement_reporting():
    broken = ChainValues(s=1, values=(Fraction(1, 3),) * 2 + (Fraction(32, 3),) + (Fraction(1, 3),) * 3)
    assert not broken.all_equal
    assert broken.first_disagreement() == (1, 3)


def test_det_t1_values():
    assert det_t1(1) == Fraction(1, 3)
    assert det_t1(2) == Fraction(32, 525)
    assert det_t1(4) == DET_T1_S4


def test_det_t1_matches_live_oracle():
    assert det_t1(4) == det_elimination(build_matrix(4, 1))


def test_det_t1_positive_through_twenty():
    for s in range(1, 21):
        assert det_t1(s) > 0
