from abc import ABC, abstractmethod
from fractions import Fraction
from typing import List, Sequence

from algebra import TruncatedSeries
from models import CurveTargetModel, EisensteinComparisonModel, FreeEnergySlice


class ICurveService(ABC):
    """
    Interface for degree-zero free energies of a curve target.
    Times are P_i (coefficient of 1) and Q_i (coefficient of [pt]).
    """

    @abstractmethod
    def u_series(self, n_max: int, degree: int) -> TruncatedSeries:
        """U(P, Q) = sum_i Q_i dV(P)/dP_i exact to degree D"""
        pass

    @abstractmethod
    def u_derivative(self, m: int, n_max: int, degree: int) -> TruncatedSeries:
        """U_m = d^m U / dP_0^m exact to degree D"""
        pass

    @abstractmethod
    def free_energy_deg0(self, g: int, target: CurveTargetModel, n_max: int, degree: int) -> FreeEnergySlice:
        """
        Genus-g degree-zero free energy of the target, even sector

        Args:
            g: genus, g >= 0
            target: curve of genus h
            n_max: largest descendant index N
            degree: total-degree precision D in P and Q

        Raises:
            DomainException: If g < 0
        """
        pass

    @abstractmethod
    def target_term(self, g: int, n_max: int, degree: int) -> TruncatedSeries:
        """
        The part of the free energy multiplied by 2-2h, per unit of 2-2h:
        log V_1(P)/24 in genus one, -(-1)^g W_g(V(P)) for g >= 2, zero in genus zero
        """
        pass

    @abstractmethod
    def buryak_expansion(self, g: int, n_max: int, degree: int) -> TruncatedSeries:
        """
        sum over lambda in P_{2g-2} of U_lambda / prod m_j! C^E_lambda(0),
        minus U/24 in genus one
        """
        pass

    @abstractmethod
    def c_elliptic_constant(self, parts: Sequence[int]) -> Fraction:
        """C^E_lambda(0) for a stationary insertion profile of non-negative parts"""
        pass

    @abstractmethod
    def eisenstein_constant_check(self) -> List[EisensteinComparisonModel]:
        pass

    @abstractmethod
    def stationary_constant(self, g: int, target: CurveTargetModel) -> Fraction:
        """Coefficient of Q_{2g-2} in the free energy at P = 0"""
        pass
