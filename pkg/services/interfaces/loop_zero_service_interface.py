from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, List, Optional

from algebra import JetPolynomial, Partition, PoleSeries
from models import WFormula

JetMatrix = List[List[JetPolynomial]]


class ILoopZeroService(ABC):
    """
    Interface for the degree-zero loop equation.
    Builds B_g(lambda; V), the triangular system M and its inverse, and W_g.
    Matrix indices are 0-based in code; row/column i stands for index i+1, which
    pairs with the pole order i+2.
    """

    @abstractmethod
    def b_series(self, g: int) -> PoleSeries:
        """
        The rational function B_g(lambda; V) as a pole series

        Args:
            g: genus, g >= 1

        Returns:
            Pole series with orders between 2 and 2g

        Raises:
            DomainException: If g < 1
        """
        pass

    @abstractmethod
    def b_coefficients(self, g: int) -> Dict[int, JetPolynomial]:
        """
        B_{g,j} = Coef((lambda-V)^(-j-1), B_g) for j = 1..2g-1

        Raises:
            DomainException: If g < 1 or B_g has a pole outside orders 2..2g
        """
        pass

    @abstractmethod
    def m_matrix(self, g: int) -> JetMatrix:
        """M_{j,r} = Coef((lambda-V)^(-j-1), d^r (lambda-V)^(-1)), j, r = 1..2g-1"""
        pass

    @abstractmethod
    def c_entry(self, i: int, j: int) -> JetPolynomial:
        """The closed-form inverse entry c_{i,j} (zero when i > j)"""
        pass

    @abstractmethod
    def m_inverse_closed(self, g: int) -> JetMatrix:
        pass

    @abstractmethod
    def m_inverse_solved(self, g: int) -> JetMatrix:
        """M^-1 by back substitution, independent of the closed formula"""
        pass

    @abstractmethod
    def solve_gradient(self, g: int) -> List[JetPolynomial]:
        """(dW_g/dV_1, ..., dW_g/dV_{2g-1}) = M^-1 C_g"""
        pass

    @abstractmethod
    def w_g(self, g: int, formula: WFormula = WFormula.THEOREM1) -> JetPolynomial:
        """
        The universal function W_g

        Args:
            g: genus, g >= 2 (genus one is logarithmic)
            formula: theorem1 sums k = 2..2g-1 with weight k-1,
                equivalent sums k = 1..2g-1 with weight k

        Returns:
            W_g as a Laurent polynomial in V_1 over V_2..V_{2g-1}

        Raises:
            DomainException: If g < 2
        """
        pass

    @abstractmethod
    def w_g_coefficients(self, g: int) -> Dict[Partition, Fraction]:
        """The constants c^g_mu with W_g = sum_mu c^g_mu V_{mu+1} / V_1^l(mu)"""
        pass

    @abstractmethod
    def loop_residual(self, g: int, w: Optional[JetPolynomial] = None) -> PoleSeries:
        """
        sum_r (dW/dV_r) d^r (lambda-V)^(-1) - B_g; zero iff W solves the
        degree-zero loop equation

        Args:
            g: genus, g >= 1
            w: candidate W; None means W_g itself, and for g = 1 the
                logarithmic contract dW_1/dV_1 = 1/(24 V_1)
        """
        pass

    @abstractmethod
    def most_singular_coefficient(self, g: int) -> Fraction:
        """Coefficient of V_1^(2g-2) (lambda-V)^(-2g) in B_g"""
        pass
