import pytest
from fractions import Fraction
from math import factorial

from algebra import JetPolynomial, Partition, PoleSeries
from models import WFormula
from services.implementation.loop_zero_service import is_identity, jet_matmul
from utils.exceptions import DomainException


pytestmark = [pytest.mark.unit, pytest.mark.service]

V1 = JetPolynomial.variable(1)
V2 = JetPolynomial.variable(2)
V3 = JetPolynomial.variable(3)


def test_b_series_genus_one(loop_zero_service):
    assert loop_zero_service.b_series(1) == PoleSeries({2: Fraction(1, 24)})


def test_b_series_genus_two(loop_zero_service):
    expected = PoleSeries({3: V2 * Fraction(7, 1440), 4: V1 ** 2 * Fraction(1, 80)})
    assert loop_zero_service.b_series(2) == expected


def test_b_series_rejects_genus_zero(loop_zero_service):
    with pytest.raises(DomainException):
        loop_zero_service.b_series(0)


def test_b_coefficients_index_shift(loop_zero_service):
    coefficients = loop_zero_service.b_coefficients(2)
    assert sorted(coefficients) == [1, 2, 3]
    assert coefficients[1].is_zero()
    assert coefficients[2] == V2 * Fraction(7, 1440)
    assert coefficients[3] == V1 ** 2 * Fraction(1, 80)
    assert loop_zero_service.b_coefficients(1) == {1: JetPolynomial.constant(Fraction(1, 24))}


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_b_coefficients_are_homogeneous(loop_zero_service, g):
    for coefficient in loop_zero_service.b_coefficients(g).values():
        assert coefficient.is_homogeneous(2 * g - 2)


def test_m_matrix_genus_two(loop_zero_service):
    zero = JetPolynomial.zero()
    assert loop_zero_service.m_matrix(2) == [
        [V1, V2, V3],
        [zero, V1 ** 2 * 2, V1 * V2 * 6],
        [zero, zero, V1 ** 3 * 6],
    ]


def test_closed_inverse_entries(loop_zero_service):
    assert loop_zero_service.c_entry(1, 1) == V1 ** -1
    assert loop_zero_service.c_entry(3, 3) == V1 ** -3 * Fraction(1, 6)
    assert loop_zero_service.c_entry(1, 2) == V2 * V1 ** -3 * Fraction(-1, 2)
    assert loop_zero_service.c_entry(1, 3) == V3 * V1 ** -4 * Fraction(-1, 6) + V2 ** 2 * V1 ** -5 * Fraction(1, 2)
    assert loop_zero_service.c_entry(3, 1).is_zero()

    with pytest.raises(DomainException):
        loop_zero_service.c_entry(0, 1)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_inverse_matrices_agree(loop_zero_service, g):
    matrix = loop_zero_service.m_matrix(g)
    closed = loop_zero_service.m_inverse_closed(g)
    assert closed == loop_zero_service.m_inverse_solved(g)
    assert is_identity(jet_matmul(matrix, closed))
    assert is_identity(jet_matmul(closed, matrix))


def test_is_identity_detects_defects():
    assert not is_identity([[V1]])
    assert is_identity([[JetPolynomial.one()]])


def test_w2_matches_closed_expression(loop_zero_service, w2_expected):
    assert loop_zero_service.w_g(2) == w2_expected


def test_w3_matches_closed_expression(loop_zero_service, w3_expected):
    assert loop_zero_service.w_g(3) == w3_expected


@pytest.mark.parametrize("g", [2, 3, 4])
def test_formula_variants_agree(loop_zero_service, g):
    assert loop_zero_service.w_g(g, WFormula.THEOREM1) == loop_zero_service.w_g(g, "equivalent")


def test_w_g_rejects_genus_one(loop_zero_service):
    with pytest.raises(DomainException):
        loop_zero_service.w_g(1)


def test_w_g_is_cached(loop_zero_service, repository):
    first = loop_zero_service.w_g(2)
    assert repository.jets.get_jet_result("w_g:theorem1", 2) is first
    assert loop_zero_service.w_g(2) is first


def test_w_g_coefficients(loop_zero_service):
    assert loop_zero_service.w_g_coefficients(2) == {
        Partition((2,)): Fraction(1, 480),
        Partition((1, 1)): Fraction(-11, 5760),
    }
    assert loop_zero_service.w_g_coefficients(3)[Partition((4,))] == Fraction(41, 580608)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_loop_residual_vanishes(loop_zero_service, g):
    assert loop_zero_service.loop_residual(g).is_zero()


def test_loop_residual_detects_wrong_candidate(loop_zero_service):
    assert not loop_zero_service.loop_residual(2, V3 * V1 ** -1).is_zero()
    with pytest.raises(DomainException):
        loop_zero_service.loop_residual(2, JetPolynomial.variable(4))


@pytest.mark.parametrize("g", [2, 3, 4])
def test_solved_gradient_is_formal_gradient(loop_zero_service, g):
    w = loop_zero_service.w_g(g)
    assert loop_zero_service.solve_gradient(g) == [w.partial(k) for k in range(1, 2 * g)]


@pytest.mark.parametrize("g,value", [(1, Fraction(1, 24)), (2, Fraction(1, 480)), (3, Fraction(41, 580608))])
def test_most_singular_coefficient(loop_zero_service, g, value):
    assert loop_zero_service.most_singular_coefficient(g) == factorial(2 * g - 1) * value
