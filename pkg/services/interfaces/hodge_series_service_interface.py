from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Optional, Sequence

from algebra import JetPolynomial, TruncatedSeries
from models import HodgeClass, HodgeTable, IdentityReportModel


class IHodgeSeriesService(ABC):
    """
    Interface for the truncated-series engine.
    Series live over the alphabet T0..TN (or another prefix) and carry their own
    precision; requests that need more precision than a series has are rejected.
    """

    @abstractmethod
    def v_series(self, n_max: int, degree: int, prefix: str = "T") -> TruncatedSeries:
        """
        V(T) by direct summation over index multisets

        Args:
            n_max: largest time index N
            degree: total-degree precision D
            prefix: alphabet prefix

        Returns:
            V exact to total degree D in T_0..T_N
        """
        pass

    @abstractmethod
    def v_fixed_point_oracle(self, n_max: int, degree: int, prefix: str = "T") -> TruncatedSeries:
        """
        V(T) as the fixed point of V = sum_i T_i V^i / i!, iterated from V = 0

        Raises:
            TruncationException: If the iteration does not stabilize
        """
        pass

    @abstractmethod
    def v_k_series(self, k: int, n_max: int, degree: int, prefix: str = "T",
                   base: Optional[TruncatedSeries] = None) -> TruncatedSeries:
        """
        V_k = d^k V / dT_0^k exact to degree D

        Args:
            base: V to differentiate; built to degree D + k when omitted

        Raises:
            TruncationException: If base is exact to less than degree D + k
        """
        pass

    @abstractmethod
    def genus_zero_series(self, n_max: int, degree: int, prefix: str = "T") -> TruncatedSeries:
        """H_0(1; T) = sum_{n>=3} 1/(n(n-1)(n-2)) sum_{|i|=n-3} prod T_i / i!"""
        pass

    @abstractmethod
    def substitute(self, poly: JetPolynomial, n_max: int, degree: int, prefix: str = "T") -> TruncatedSeries:
        """poly(V_1(T), V_2(T), ...) exact to degree D"""
        pass

    @abstractmethod
    def hodge_series(self, g: int, class_tag: HodgeClass, n_max: int, degree: int) -> TruncatedSeries:
        """
        H_g(lambda_g; T) = b_g V_{2g-2}(T) or H_g(lambda_{g-1}; T) = W_g(V(T))
        (log V_1 / 24 in genus one)

        Raises:
            DomainException: If g < 1
        """
        pass

    @abstractmethod
    def extract_integral(self, series: TruncatedSeries, indices: Sequence[int]) -> Fraction:
        """
        Hodge integral with psi exponents ``indices`` from a generating series

        Raises:
            TruncationException: If an index or the point count exceeds the series
        """
        pass

    @abstractmethod
    def lambda_g_closed_form(self, g: int, indices: Sequence[int]) -> Fraction:
        """Multinomial C(2g-3+n; i_1..i_n) b_g, zero off the dimension constraint"""
        pass

    @abstractmethod
    def theorem_a_value(self, g: int) -> Fraction:
        """Closed evaluation of the integral of psi^(2g-1) lambda_{g-1} over M_{g,1}"""
        pass

    @abstractmethod
    def hodge_table(self, g: int, class_tag: HodgeClass, max_points: int, max_psi: int) -> HodgeTable:
        pass

    @abstractmethod
    def check_string(self, table: HodgeTable) -> IdentityReportModel:
        pass

    @abstractmethod
    def check_dilaton(self, table: HodgeTable) -> IdentityReportModel:
        pass
