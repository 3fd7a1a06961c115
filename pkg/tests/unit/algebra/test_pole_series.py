import pytest
from fractions import Fraction
from math import factorial

from algebra import Grading, JetPolynomial, PoleSeries, derivatives_of_simple_pole, derivatives_table
from utils.exceptions import DomainException


pytestmark = [pytest.mark.unit, pytest.mark.algebra]

V1 = JetPolynomial.variable(1)
V2 = JetPolynomial.variable(2)


def test_basic_pole_derivative():
    # d (lambda-V)^(-2) = 2 V1 (lambda-V)^(-3)
    assert PoleSeries.basic(2).derive() == PoleSeries({3: V1 * 2})
    assert PoleSeries.basic(0).derive().is_zero()


def test_second_derivative_of_double_pole():
    assert PoleSeries.basic(2).derive(2) == PoleSeries({3: V2 * 2, 4: V1 ** 2 * 6})


def test_simple_pole_derivatives():
    assert derivatives_of_simple_pole(0) == PoleSeries.basic(1)
    assert derivatives_of_simple_pole(1) == PoleSeries({2: V1})
    assert derivatives_of_simple_pole(2) == PoleSeries({2: V2, 3: V1 ** 2 * 2})

    with pytest.raises(DomainException):
        derivatives_of_simple_pole(-1)


@pytest.mark.parametrize("r", range(1, 8))
def test_simple_pole_derivative_shape(r):
    series = derivatives_of_simple_pole(r)
    assert min(series.orders()) == 2
    assert max(series.orders()) == r + 1
    assert series.coef(2) == JetPolynomial.variable(r)
    assert series.coef(r + 1) == JetPolynomial.monomial(factorial(r), {1: r})


def test_derivatives_table_is_consistent():
    table = derivatives_table(5)
    assert len(table) == 6
    for r in range(1, 6):
        assert table[r] == table[r - 1].derive()


def test_products_add_pole_orders():
    product = PoleSeries.basic(1) * PoleSeries({2: V1})
    assert product == PoleSeries({3: V1})
    assert (PoleSeries.basic(2) * Fraction(1, 24)).coef(2) == Fraction(1, 24)
    assert (V1 * PoleSeries.basic(2)).coef(2) == V1


def test_leibniz_rule():
    a = PoleSeries({2: V2})
    b = PoleSeries({1: V1 ** 2})
    assert (a * b).derive() == a.derive() * b + a * b.derive()


@pytest.mark.parametrize("r", range(0, 7))
def test_derivative_coefficients_are_homogeneous(r):
    table = derivatives_table(6)
    for series in (table[r], PoleSeries.basic(2).derive(r)):
        for order, coef in series:
            assert coef.euler(Grading.DEGREE) == coef * r, (r, order)


def test_leibniz_rule_on_random_series(random_jets):
    polys = random_jets(12, terms=3, top=4)
    for i in range(0, 12, 4):
        a = PoleSeries({1: polys[i], 3: polys[i + 1]})
        b = PoleSeries({0: polys[i + 2], 2: polys[i + 3]})
        assert (a * b).derive() == a.derive() * b + a * b.derive()
        assert (a * b).derive(2) == a.derive(2) * b + a.derive() * b.derive() * 2 + a * b.derive(2)


def test_zero_coefficients_are_dropped():
    series = PoleSeries({2: V1}) - PoleSeries({2: V1})
    assert series.is_zero()
    assert series.render() == "0"
    assert PoleSeries({2: Fraction(1, 24)}).render() == "[(1/24)] * (λ−V)^(−2)"

    with pytest.raises(DomainException):
        PoleSeries({-1: V1})
