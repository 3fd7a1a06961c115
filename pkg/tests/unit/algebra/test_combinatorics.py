import pytest
import sympy
from fractions import Fraction

from algebra import (
    Partition,
    bernoulli,
    binomial,
    enumerate_partitions,
    harmonic_number,
    lagrange_number,
    lambda_g_constant,
    multinomial,
    partition_count,
    zeta_at_negative,
)
from utils.exceptions import DomainException


pytestmark = [pytest.mark.unit, pytest.mark.algebra]


def test_partition_validation():
    assert Partition((3, 1, 1)).weight == 5
    assert Partition((3, 1, 1)).length == 3
    assert Partition.from_parts([1, 3, 1]) == Partition((3, 1, 1))

    with pytest.raises(DomainException):
        Partition((1, 3))
    with pytest.raises(DomainException):
        Partition((2, 0))


def test_partition_multiplicities():
    mu = Partition((2, 2, 1))
    assert mu.multiplicity(2) == 2
    assert mu.multiplicities == {2: 2, 1: 1}
    assert mu.multiplicity_factorial == 2
    assert mu.shifted() == (3, 3, 2)
    assert str(mu) == "(2,2,1)"
    assert not Partition(())


def test_enumerate_partitions_order():
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert enumerate_partitions(0) == (Partition(()),)

    with pytest.raises(DomainException):
        enumerate_partitions(-1)


@pytest.mark.parametrize("k", range(0, 21))
def test_partition_count_matches_sympy(k):
    assert partition_count(k) == len(enumerate_partitions(k)) == sympy.npartitions(k)


def test_partition_count_reference_values():
    assert partition_count(14) == 135


@pytest.mark.parametrize("n", range(0, 31))
def test_bernoulli_matches_sympy(n):
    expected = Fraction(str(sympy.bernoulli(n))) if n != 1 else Fraction(-1, 2)
    assert bernoulli(n) == expected


def test_bernoulli_rejects_negative_index():
    with pytest.raises(DomainException):
        bernoulli(-1)


def test_lambda_g_constants():
    assert lambda_g_constant(1) == Fraction(1, 24)
    assert lambda_g_constant(2) == Fraction(7, 5760)
    assert lambda_g_constant(3) == Fraction(31, 967680)

    with pytest.raises(DomainException):
        lambda_g_constant(0)


def test_lagrange_numbers():
    assert lagrange_number(Partition(())) == 1
    assert lagrange_number(Partition((1,))) == -1
    # -3! / 3!
    assert lagrange_number(Partition((2,))) == Fraction(-6, 6)
    # 4! / (2! * 2!^2)
    assert lagrange_number(Partition((1, 1))) == 3


def test_zeta_at_negative():
    assert zeta_at_negative(2) == Fraction(-1, 12)
    assert zeta_at_negative(4) == Fraction(1, 120)
    assert zeta_at_negative(6) == Fraction(-1, 252)

    for k in (0, 1, 3):
        with pytest.raises(DomainException):
            zeta_at_negative(k)


def test_multinomial_and_binomial():
    assert multinomial(3, (2, 1)) == 3
    assert multinomial(0, ()) == 1
    assert multinomial(3, (1, 1)) == 0
    assert multinomial(2, (3, -1)) == 0
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(3, -1) == 0


def test_harmonic_number():
    assert harmonic_number(0) == 0
    assert harmonic_number(3) == Fraction(11, 6)
