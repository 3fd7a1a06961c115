import logging
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence

from algebra import (
    JetMonomial,
    JetPolynomial,
    Partition,
    PoleSeries,
    binomial,
    derivatives_table,
    enumerate_partitions,
    lagrange_number,
    lambda_g_constant,
)
from models import WFormula
from repository import IRepository
from services.interfaces.loop_zero_service_interface import ILoopZeroService, JetMatrix
from utils.exceptions import DomainException


def jet_matmul(left: JetMatrix, right: JetMatrix) -> JetMatrix:
    """Product of square matrices of jet polynomials"""
    size = len(left)
    result = []
    for i in range(size):
        row = []
        for j in range(size):
            entry = JetPolynomial.zero()
            for k in range(size):
                if left[i][k] and right[k][j]:
                    entry = entry + left[i][k] * right[k][j]
            row.append(entry)
        result.append(row)
    return result


def is_identity(matrix: JetMatrix) -> bool:
    return all(
        entry == (1 if i == j else 0)
        for i, row in enumerate(matrix)
        for j, entry in enumerate(row)
    )


class LoopZeroService(ILoopZeroService):
    def __init__(self, repository: IRepository):
        self.logger = logging.getLogger("app")
        self.repository = repository

    @staticmethod
    def _require_genus(g: int, minimum: int = 1):
        if not isinstance(g, int) or g < minimum:
            raise DomainException(f"genus must be an integer >= {minimum}, got {g}")

    def b_series(self, g: int) -> PoleSeries:
        self._require_genus(g)
        return self.repository.jets.get_or_compute("b_series", g, lambda: self._build_b_series(g))

    def _build_b_series(self, g: int) -> PoleSeries:
        self.logger.info(f"Building B_g for g={g}")
        simple = derivatives_table(2 * g - 1)
        b_g = lambda_g_constant(g)

        series = PoleSeries.basic(2).derive(2 * g - 2).scale(b_g)
        for k in range(1, 2 * g - 1):
            series = series + (simple[k - 1] * simple[2 * g - 1 - k]).scale(b_g * binomial(2 * g - 2, k))
        for g1 in range(1, g):
            g2 = g - g1
            factor = Fraction(1, 2) * lambda_g_constant(g1) * lambda_g_constant(g2)
            series = series - (simple[2 * g1 - 1] * simple[2 * g2 - 1]).scale(factor)
        return series

    def b_coefficients(self, g: int) -> Dict[int, JetPolynomial]:
        series = self.b_series(g)
        stray = [order for order in series.orders() if order < 2 or order > 2 * g]
        if stray:
            raise DomainException(f"B_{g} has poles of order {stray} outside 2..{2 * g}")
        return {j: series.coef(j + 1) for j in range(1, 2 * g)}

    def m_matrix(self, g: int) -> JetMatrix:
        self._require_genus(g)
        size = 2 * g - 1
        simple = derivatives_table(size)
        return [[simple[r].coef(j + 1) for r in range(1, size + 1)] for j in range(1, size + 1)]

    def c_entry(self, i: int, j: int) -> JetPolynomial:
        if i < 1 or j < 1:
            raise DomainException(f"matrix indices start at 1, got ({i}, {j})")
        if i > j:
            return JetPolynomial.zero()
        terms: Dict[JetMonomial, Fraction] = {}
        for mu in enumerate_partitions(j - i):
            coeff = Fraction(binomial(mu.length + j - 1, i - 1), factorial(j)) * lagrange_number(mu)
            if not coeff:
                continue
            exponents = {1: -(mu.length + j)}
            for part in mu.shifted():
                exponents[part] = exponents.get(part, 0) + 1
            monomial = JetMonomial(exponents)
            terms[monomial] = terms.get(monomial, 0) + coeff
        return JetPolynomial(terms)

    def m_inverse_closed(self, g: int) -> JetMatrix:
        self._require_genus(g)
        size = 2 * g - 1
        return self.repository.jets.get_or_compute(
            "m_inverse_closed", g,
            lambda: [[self.c_entry(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)],
        )

    def m_inverse_solved(self, g: int) -> JetMatrix:
        self._require_genus(g)
        matrix = self.m_matrix(g)
        size = len(matrix)
        inverse_diagonal = [matrix[r][r] ** -1 for r in range(size)]
        columns = []
        for c in range(size):
            column = [JetPolynomial.zero()] * size
            for r in range(size - 1, -1, -1):
                acc = JetPolynomial.one() if r == c else JetPolynomial.zero()
                for k in range(r + 1, size):
                    if matrix[r][k] and column[k]:
                        acc = acc - matrix[r][k] * column[k]
                column[r] = acc * inverse_diagonal[r]
            columns.append(column)
        return [[columns[c][r] for c in range(size)] for r in range(size)]

    def solve_gradient(self, g: int) -> List[JetPolynomial]:
        self._require_genus(g)
        inverse = self.m_inverse_closed(g)
        rhs = self.b_coefficients(g)
        size = 2 * g - 1
        gradient = []
        for k in range(size):
            entry = JetPolynomial.zero()
            for j in range(size):
                if inverse[k][j] and rhs[j + 1]:
                    entry = entry + inverse[k][j] * rhs[j + 1]
            gradient.append(entry)
        return gradient

    def w_g(self, g: int, formula: WFormula = WFormula.THEOREM1) -> JetPolynomial:
        self._require_genus(g, 2)
        formula = WFormula(formula)
        return self.repository.jets.get_or_compute(
            f"w_g:{formula.value}", g, lambda: self._assemble_w(g, formula)
        )

    def _assemble_w(self, g: int, formula: WFormula) -> JetPolynomial:
        self.logger.info(f"Assembling W_g for g={g} ({formula.value})")
        gradient = self.solve_gradient(g)
        start, shift = (2, 1) if formula is WFormula.THEOREM1 else (1, 0)
        total = JetPolynomial.zero()
        for k in range(start, 2 * g):
            weight = k - shift
            total = total + JetPolynomial.variable(k) * gradient[k - 1] * weight
        return total * Fraction(1, 2 * g - 2)

    def w_g_coefficients(self, g: int) -> Dict[Partition, Fraction]:
        w = self.w_g(g)
        coefficients: Dict[Partition, Fraction] = {}
        for monomial, coeff in w:
            parts = []
            v1_exponent = 0
            for k, e in monomial.exponents:
                if k == 1:
                    v1_exponent = e
                else:
                    parts.extend([k - 1] * e)
            mu = Partition.from_parts(parts)
            if mu.weight != 2 * g - 2 or v1_exponent != -mu.length:
                raise DomainException(
                    f"W_{g} term {monomial.render()} is not of the form V_(mu+1)/V1^l(mu) with |mu| = {2 * g - 2}"
                )
            coefficients[mu] = coeff
        return coefficients

    def loop_residual(self, g: int, w: Optional[JetPolynomial] = None) -> PoleSeries:
        self._require_genus(g)
        size = 2 * g - 1
        if w is None and g == 1:
            # dW_1/dV_1 = 1/(24 V_1)
            gradient: Sequence[JetPolynomial] = [JetPolynomial.monomial(Fraction(1, 24), {1: -1})]
        else:
            if w is None:
                w = self.w_g(g)
            if w.max_variable() > size:
                raise DomainException(f"candidate W uses V{w.max_variable()}, beyond V{size}")
            gradient = [w.partial(r) for r in range(1, size + 1)]

        simple = derivatives_table(size)
        total = PoleSeries.zero()
        for r, partial in enumerate(gradient, start=1):
            if partial:
                total = total + simple[r].scale(partial)
        return total - self.b_series(g)

    def most_singular_coefficient(self, g: int) -> Fraction:
        return self.b_series(g).coef(2 * g).coefficient({1: 2 * g - 2})
