# tests/conftest.py
import sys
import pathlib
import random
from fractions import Fraction

import pytest

# Add project root to Python path
project_root = str(pathlib.Path(__file__).parent.parent.absolute())
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from algebra import JetPolynomial
from repository import create_memory_repository
from services.service_factory import (
    create_loop_zero_service,
    create_hodge_series_service,
    create_curve_service,
    create_verification_service
)


@pytest.fixture
def repository():
    """A fresh result store per test."""
    return create_memory_repository()


@pytest.fixture
def loop_zero_service(repository):
    return create_loop_zero_service(repository)


@pytest.fixture
def hodge_series_service(repository, loop_zero_service):
    return create_hodge_series_service(repository, loop_zero_service)


@pytest.fixture
def curve_service(repository, loop_zero_service, hodge_series_service):
    return create_curve_service(repository, loop_zero_service, hodge_series_service)


@pytest.fixture
def verification_service(loop_zero_service, hodge_series_service, curve_service):
    return create_verification_service(loop_zero_service, hodge_series_service, curve_service, workers=2)


def jet(*terms):
    """Build a jet polynomial from (coefficient, {index: exponent}) pairs."""
    total = JetPolynomial.zero()
    for coeff, exponents in terms:
        total = total + JetPolynomial.monomial(coeff, exponents)
    return total


@pytest.fixture
def w2_expected():
    return jet(
        (Fraction(1, 480), {3: 1, 1: -1}),
        (Fraction(-11, 5760), {2: 2, 1: -2}),
    )


@pytest.fixture
def w3_expected():
    return jet(
        (Fraction(-19, 53760), {2: 4, 1: -4}),
        (Fraction(151, 207360), {2: 2, 3: 1, 1: -3}),
        (Fraction(-61, 322560), {3: 2, 1: -2}),
        (Fraction(-373, 1451520), {2: 1, 4: 1, 1: -2}),
        (Fraction(41, 580608), {5: 1, 1: -1}),
    )


@pytest.fixture
def random_jets():
    """Seeded factory: count jet polynomials in V1..V_top, V1 exponents in [-3, 3]."""
    rng = random.Random(20260519)

    def build(count, terms=4, top=5):
        polys = []
        for _ in range(count):
            total = JetPolynomial.zero()
            for _ in range(terms):
                exponents = {1: rng.randint(-3, 3)}
                exponents.update({k: rng.randint(0, 2) for k in range(2, top + 1)})
                coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
                total = total + JetPolynomial.monomial(coeff, exponents)
            polys.append(total)
        return polys

    return build
