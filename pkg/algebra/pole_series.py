"""
Finite expansions sum_j p_j(V) (lambda - V)^(-j).

lambda is never stored: a series is the map j -> p_j, so identities "in lambda"
become coefficient-wise equalities.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from algebra.jet_polynomial import JetPolynomial
from utils.exceptions import DomainException

__all__ = ["PoleSeries", "derivatives_of_simple_pole", "derivatives_table"]


class PoleSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, JetPolynomial]] = None):
        cleaned: Dict[int, JetPolynomial] = {}
        for order, poly in (coeffs or {}).items():
            if order < 0:
                raise DomainException(f"pole order must be >= 0, got {order}")
            if not isinstance(poly, JetPolynomial):
                poly = JetPolynomial.constant(poly)
            if poly:
                cleaned[order] = poly
        self._coeffs = cleaned

    @classmethod
    def basic(cls, j: int) -> "PoleSeries":
        """(lambda - V)^(-j)"""
        if j < 0:
            raise DomainException(f"pole order must be >= 0, got {j}")
        return cls({j: JetPolynomial.one()})

    @classmethod
    def zero(cls) -> "PoleSeries":
        return cls()

    @property
    def coeffs(self) -> Mapping[int, JetPolynomial]:
        return MappingProxyType(self._coeffs)

    def orders(self) -> Tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def coef(self, j: int) -> JetPolynomial:
        """Coefficient of (lambda - V)^(-j)"""
        return self._coeffs.get(j, JetPolynomial.zero())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __iter__(self) -> Iterator[Tuple[int, JetPolynomial]]:
        return iter(sorted(self._coeffs.items()))

    def __add__(self, other: "PoleSeries") -> "PoleSeries":
        result = dict(self._coeffs)
        for order, poly in other._coeffs.items():
            result[order] = result.get(order, JetPolynomial.zero()) + poly
        return PoleSeries(result)

    def __neg__(self) -> "PoleSeries":
        return PoleSeries({j: -p for j, p in self._coeffs.items()})

    def __sub__(self, other: "PoleSeries") -> "PoleSeries":
        return self + (-other)

    def scale(self, factor: Union[int, Fraction, JetPolynomial]) -> "PoleSeries":
        return PoleSeries({j: p * factor for j, p in self._coeffs.items()})

    def __mul__(self, other) -> "PoleSeries":
        if not isinstance(other, PoleSeries):
            return self.scale(other)
        result: Dict[int, JetPolynomial] = {}
        for j1, p1 in self._coeffs.items():
            for j2, p2 in other._coeffs.items():
                result[j1 + j2] = result.get(j1 + j2, JetPolynomial.zero()) + p1 * p2
        return PoleSeries(result)

    def __rmul__(self, other) -> "PoleSeries":
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PoleSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def derive(self, times: int = 1) -> "PoleSeries":
        """
        Apply d, acting on coefficients as the jet derivation and on poles as
        d (lambda - V)^(-j) = j V_1 (lambda - V)^(-j-1).
        """
        series = self
        v1 = JetPolynomial.variable(1)
        for _ in range(times):
            result: Dict[int, JetPolynomial] = {}
            for order, poly in series._coeffs.items():
                result[order] = result.get(order, JetPolynomial.zero()) + poly.derive()
                if order:
                    result[order + 1] = (
                        result.get(order + 1, JetPolynomial.zero()) + poly * v1 * order
                    )
            series = PoleSeries(result)
        return series

    def render(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"[{poly.render()}] * (λ−V)^(−{order})" for order, poly in self)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"PoleSeries({self.render()!r})"


@lru_cache(maxsize=None)
def _simple_pole_derivatives(count: int) -> Tuple[PoleSeries, ...]:
    series = [PoleSeries.basic(1)]
    for _ in range(count - 1):
        series.append(series[-1].derive())
    return tuple(series)


def derivatives_of_simple_pole(r: int) -> PoleSeries:
    """d^r (lambda - V)^(-1), memoized across r"""
    if r < 0:
        raise DomainException(f"derivative order must be >= 0, got {r}")
    return _simple_pole_derivatives(r + 1)[r]


def derivatives_table(r_max: int) -> List[PoleSeries]:
    return list(_simple_pole_derivatives(r_max + 1))
