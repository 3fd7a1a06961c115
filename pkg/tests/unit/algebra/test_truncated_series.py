import pytest
from fractions import Fraction

from algebra import TruncatedSeries, paired_alphabet, series_alphabet
from utils.exceptions import DomainException, PoleException, SeriesLogException, TruncationException


pytestmark = [pytest.mark.unit, pytest.mark.algebra]

ALPHABET = series_alphabet("T", 1)


@pytest.fixture
def t0():
    return TruncatedSeries.variable(ALPHABET, 5, "T0")


@pytest.fixture
def t1():
    return TruncatedSeries.variable(ALPHABET, 5, "T1")


def test_alphabets():
    assert series_alphabet("T", 2) == ("T0", "T1", "T2")
    assert paired_alphabet(1) == ("P0", "P1", "Q0", "Q1")
    assert series_alphabet("T", -1) == ()


def test_terms_above_precision_are_dropped(t0):
    series = TruncatedSeries(ALPHABET, 2, {(3, 0): 1, (1, 1): 2})
    assert series.terms == {(1, 1): Fraction(2)}
    with pytest.raises(TruncationException):
        series.coefficient({"T0": 3})
    with pytest.raises(DomainException):
        TruncatedSeries(ALPHABET, 2, {(1,): 1})


def test_product_precision_uses_valuations(t0, t1):
    product = t0 * t1
    assert product.precision == 6
    assert product.coefficient({"T0": 1, "T1": 1}) == 1
    assert (t0 * TruncatedSeries.constant(ALPHABET, 5, 2)).precision == 5


def test_geometric_series_reciprocal(t0, t1):
    one = TruncatedSeries.constant(ALPHABET, 5, 1)
    inverse = (one - t1).reciprocal()
    for k in range(6):
        assert inverse.coefficient({"T1": k}) == 1
    assert (inverse * (one - t1)).truncate(5) == one

    with pytest.raises(PoleException):
        t1.reciprocal()


def test_log_inverts_exp(t1):
    one = TruncatedSeries.constant(ALPHABET, 5, 1)
    log = (one + t1).log()
    expected = {(0, k): Fraction((-1) ** (k + 1), k) for k in range(1, 6)}
    assert log.terms == expected

    with pytest.raises(SeriesLogException):
        (one * 2).log()


def test_derivative_costs_one_degree(t0):
    cube = t0 ** 3
    first = cube.derivative("T0")
    assert first.precision == cube.precision - 1
    assert first.coefficient({"T0": 2}) == 3

    low = TruncatedSeries.constant(ALPHABET, 0, 1)
    with pytest.raises(TruncationException):
        low.derivative("T0")


def test_truncate_cannot_raise_precision(t0):
    with pytest.raises(TruncationException):
        t0.truncate(9)
    assert t0.truncate(0).is_zero()


def test_embed_and_restrict(t0, t1):
    wide = (t0 * t1 + t1).embed(("T0", "T1", "T2"))
    assert wide.coefficient({"T1": 1}) == 1
    assert wide.restrict(["T0"]).terms == {(0, 1, 0): Fraction(1)}

    with pytest.raises(DomainException):
        t0.embed(("T1",))


def test_graded_part(t0, t1):
    series = (t0 + t1) ** 3 + t0 * 4 + 1
    assert series.graded_part(["T1"], 0).terms == (t0 ** 3 + t0 * 4 + 1).terms
    assert series.graded_part(["T1"], 1).terms == {(2, 1): Fraction(3)}
    assert series.graded_part(["T0", "T1"], 3).terms == ((t0 + t1) ** 3).terms
    assert series.graded_part(["T1"], 4).is_zero()
    assert series.graded_part(["T1"], 1).precision == series.precision


def test_mismatched_alphabets_are_rejected(t0):
    other = TruncatedSeries.variable(("P0",), 5, "P0")
    with pytest.raises(DomainException):
        t0 + other


def test_rendering(t0, t1):
    series = t1 * t0 * Fraction(1, 2) + t0
    assert series.to_terms() == [
        {"monomial": "T0", "value": "1"},
        {"monomial": "T0 T1", "value": "1/2"},
    ]
    assert TruncatedSeries.zero(ALPHABET, 3).render() == "O(4)"
