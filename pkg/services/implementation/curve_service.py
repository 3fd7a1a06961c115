import logging
from fractions import Fraction
from math import factorial, prod
from typing import Dict, List, Sequence, Tuple

from algebra import (
    TruncatedSeries,
    enumerate_partitions,
    lambda_g_constant,
    paired_alphabet,
    zeta_at_negative,
)
from models import CurveTargetModel, EisensteinComparisonModel, FreeEnergySlice, WFormula
from repository import IRepository
from services.interfaces.curve_service_interface import ICurveService
from services.interfaces.hodge_series_service_interface import IHodgeSeriesService
from services.interfaces.loop_zero_service_interface import ILoopZeroService
from utils.exceptions import DomainException
from utils.formatting import format_rational

# Constant-term expressions of the elliptic stationary functions in Eisenstein
# series: each entry is (coefficient, weights k of the E_k factors); an empty
# weight tuple is a pure constant.
EisensteinExpression = List[Tuple[Fraction, Tuple[int, ...]]]


def eisenstein_expressions() -> Dict[Tuple[int, ...], EisensteinExpression]:
    return {
        (0,): [(Fraction(1), (2,)), (-zeta_at_negative(2) / 2, ())],
        (2,): [(Fraction(1, 12), (4,)), (Fraction(1, 2), (2, 2))],
        (1, 1): [(Fraction(7, 180), (6,)), (Fraction(2, 3), (2, 4)), (Fraction(-8, 3), (2, 2, 2))],
    }


def eisenstein_constant(k: int) -> Fraction:
    """E_k(q) at q = 0, i.e. zeta(1-k)/2"""
    return zeta_at_negative(k) / 2


class CurveService(ICurveService):
    def __init__(self, repository: IRepository, loop_zero_service: ILoopZeroService,
                 hodge_series_service: IHodgeSeriesService):
        self.logger = logging.getLogger("app")
        self.repository = repository
        self.loop_zero_service = loop_zero_service
        self.hodge_series_service = hodge_series_service

    @staticmethod
    def _require_truncation(n_max: int, degree: int):
        if n_max < 0:
            raise DomainException(f"largest descendant index must be >= 0, got {n_max}")
        if degree < 0:
            raise DomainException(f"truncation degree must be >= 0, got {degree}")

    def _lift(self, series: TruncatedSeries, n_max: int) -> TruncatedSeries:
        return series.embed(paired_alphabet(n_max))

    def _q_contraction(self, potential: TruncatedSeries, n_max: int, degree: int) -> TruncatedSeries:
        """sum_i Q_i d(potential)/dP_i for a potential in the P times"""
        alphabet = paired_alphabet(n_max)
        total = TruncatedSeries.zero(alphabet, degree)
        if degree == 0:
            return total
        lifted = self._lift(potential, n_max)
        for i in range(n_max + 1):
            q_i = TruncatedSeries.variable(alphabet, degree, f"Q{i}")
            total = total + q_i * lifted.derivative(f"P{i}")
        return total.truncate(degree)

    def u_series(self, n_max: int, degree: int) -> TruncatedSeries:
        self._require_truncation(n_max, degree)
        return self.repository.series.get_or_compute(
            "u", (n_max, degree),
            lambda: self._q_contraction(self.hodge_series_service.v_series(n_max, degree, "P"), n_max, degree),
        )

    def u_derivative(self, m: int, n_max: int, degree: int) -> TruncatedSeries:
        if m < 0:
            raise DomainException(f"derivative order must be >= 0, got {m}")
        return self.u_series(n_max, degree + m).derivative("P0", m).truncate(degree)

    def target_term(self, g: int, n_max: int, degree: int) -> TruncatedSeries:
        self._require_truncation(n_max, degree)
        if g < 0:
            raise DomainException(f"genus must be >= 0, got {g}")
        if g == 0:
            return TruncatedSeries.zero(paired_alphabet(n_max), degree)
        if g == 1:
            v_1 = self.hodge_series_service.v_k_series(1, n_max, degree, "P")
            return self._lift(v_1.log().scale(Fraction(1, 24)), n_max)
        w = self.loop_zero_service.w_g(g, WFormula.THEOREM1)
        substituted = self.hodge_series_service.substitute(w, n_max, degree, "P")
        return self._lift(substituted.scale(-(-1) ** g), n_max)

    def free_energy_deg0(self, g: int, target: CurveTargetModel, n_max: int, degree: int) -> FreeEnergySlice:
        if g < 0:
            raise DomainException(f"genus must be >= 0, got {g}")
        self._require_truncation(n_max, degree)
        self.logger.info(f"Computing degree-zero F_{g} for h={target.h}, N={n_max}, D={degree}")

        if g == 0:
            potential = self.hodge_series_service.genus_zero_series(n_max, degree, "P")
            series = self._q_contraction(potential, n_max, degree)
        else:
            if g == 1:
                series = self.u_series(n_max, degree).scale(Fraction(-1, 24))
            else:
                series = self.u_derivative(2 * g - 2, n_max, degree).scale((-1) ** g * lambda_g_constant(g))
            chi = target.euler_characteristic
            if chi:
                series = series + self.target_term(g, n_max, degree).scale(chi)
        return FreeEnergySlice(g=g, target=target, series=series.truncate(degree))

    def buryak_expansion(self, g: int, n_max: int, degree: int) -> TruncatedSeries:
        if g < 1:
            raise DomainException(f"genus must be >= 1, got {g}")
        self._require_truncation(n_max, degree)
        profiles = [(0,)] if g == 1 else [mu.parts for mu in enumerate_partitions(2 * g - 2)]
        total = TruncatedSeries.zero(paired_alphabet(n_max), degree)
        for parts in profiles:
            constant = self.c_elliptic_constant(parts)
            if not constant:
                continue
            term = TruncatedSeries.constant(paired_alphabet(n_max), degree, 1)
            for part in parts:
                term = term * self.u_derivative(part, n_max, degree)
            multiplicities = prod(factorial(parts.count(p)) for p in set(parts))
            total = total + term.scale(constant / multiplicities)
        if g == 1:
            total = total - self.u_series(n_max, degree).scale(Fraction(1, 24))
        return total.truncate(degree)

    def c_elliptic_constant(self, parts: Sequence[int]) -> Fraction:
        parts = tuple(parts)
        if any(not isinstance(p, int) or p < 0 for p in parts):
            raise DomainException(f"stationary profile parts must be non-negative integers, got {parts}")
        weight = sum(parts)
        if weight % 2:
            return Fraction(0)
        g = weight // 2 + 1
        if parts != (2 * g - 2,):
            return Fraction(0)
        value = (-1) ** g * lambda_g_constant(g)
        if g == 1:
            value += Fraction(1, 24)
        return value

    def eisenstein_constant_check(self) -> List[EisensteinComparisonModel]:
        comparisons = []
        for parts, expression in eisenstein_expressions().items():
            value = sum(
                (coeff * prod((eisenstein_constant(k) for k in weights), start=Fraction(1))
                 for coeff, weights in expression),
                Fraction(0),
            )
            expected = self.c_elliptic_constant(parts)
            comparisons.append(EisensteinComparisonModel(
                partition=list(parts),
                eisenstein_value=format_rational(value),
                corollary_value=format_rational(expected),
                agrees=value == expected,
            ))
        return comparisons

    def stationary_constant(self, g: int, target: CurveTargetModel) -> Fraction:
        if g < 1:
            raise DomainException(f"stationary constants start at genus 1, got {g}")
        slice_ = self.free_energy_deg0(g, target, 2 * g - 2, 1)
        return slice_.series.coefficient({f"Q{2 * g - 2}": 1})
