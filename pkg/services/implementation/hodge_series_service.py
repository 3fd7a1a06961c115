import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from algebra import (
    JetPolynomial,
    TruncatedSeries,
    harmonic_number,
    lambda_g_constant,
    multinomial,
    series_alphabet,
    bernoulli,
)
from models import HodgeClass, HodgeTable, IdentityReportModel, WFormula, canonical_key
from repository import IRepository
from services.interfaces.hodge_series_service_interface import IHodgeSeriesService
from services.interfaces.loop_zero_service_interface import ILoopZeroService
from utils.exceptions import DomainException, TruncationException
from utils.formatting import format_rational


def exponent_vectors(width: int, size: int, weight: int) -> Iterator[Tuple[int, ...]]:
    """Exponent vectors e of the given width with sum e_j = size and sum j e_j = weight"""

    def walk(j: int, size: int, weight: int) -> Iterator[Tuple[int, ...]]:
        if j == 0:
            if weight == 0:
                yield (size,)
            return
        for e in range(min(size, weight // j) + 1):
            for rest in walk(j - 1, size - e, weight - j * e):
                yield rest + (e,)

    if width <= 0 or size < 0 or weight < 0:
        return
    yield from walk(width - 1, size, weight)


def _point_sum(n_max: int, degree: int, prefix: str, first: int, shift: int,
               weight: Callable[[int], Fraction]) -> TruncatedSeries:
    """
    sum_{n >= first} weight(n) sum_{i_1+..+i_n = n-shift} prod T_(i_a)/i_a!,
    grouped by index multiset (n!/prod m_j! orderings each)
    """
    alphabet = series_alphabet(prefix, n_max)
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for n in range(first, degree + 1):
        factor = weight(n) * factorial(n)
        for exps in exponent_vectors(len(alphabet), n, n - shift):
            denominator = prod(factorial(m) * factorial(j) ** m for j, m in enumerate(exps))
            terms[exps] = factor / denominator
    return TruncatedSeries(alphabet, max(degree, 0), terms)


class HodgeSeriesService(IHodgeSeriesService):
    def __init__(self, repository: IRepository, loop_zero_service: ILoopZeroService):
        self.logger = logging.getLogger("app")
        self.repository = repository
        self.loop_zero_service = loop_zero_service

    @staticmethod
    def _require_truncation(n_max: int, degree: int, minimum_index: int = -1):
        if n_max < minimum_index:
            raise DomainException(f"largest time index must be >= {minimum_index}, got {n_max}")
        if degree < 0:
            raise DomainException(f"truncation degree must be >= 0, got {degree}")

    def v_series(self, n_max: int, degree: int, prefix: str = "T") -> TruncatedSeries:
        self._require_truncation(n_max, degree)
        return self.repository.series.get_or_compute(
            "v", (prefix, n_max, degree),
            lambda: _point_sum(n_max, degree, prefix, 1, 1, lambda n: Fraction(1, n)),
        )

    def v_fixed_point_oracle(self, n_max: int, degree: int, prefix: str = "T") -> TruncatedSeries:
        self._require_truncation(n_max, degree)
        alphabet = series_alphabet(prefix, n_max)
        times = [TruncatedSeries.variable(alphabet, degree, name) for name in alphabet]
        v = TruncatedSeries.zero(alphabet, degree)
        for iteration in range(degree + 2):
            power = TruncatedSeries.constant(alphabet, degree, 1)
            update = TruncatedSeries.zero(alphabet, degree)
            for i, t_i in enumerate(times):
                if i:
                    power = power * v
                update = update + (t_i * power).scale(Fraction(1, factorial(i)))
            update = update.truncate(degree)
            if update == v:
                self.logger.debug(f"V fixed point stable after {iteration} iterations")
                return v
            v = update
        raise TruncationException(f"fixed-point iteration for V did not stabilize at degree {degree}")

    def v_k_series(self, k: int, n_max: int, degree: int, prefix: str = "T",
                   base: Optional[TruncatedSeries] = None) -> TruncatedSeries:
        if k < 0:
            raise DomainException(f"derivative order must be >= 0, got {k}")
        self._require_truncation(n_max, degree, minimum_index=0)
        if base is None:
            base = self.v_series(n_max, degree + k, prefix)
        if base.precision < degree + k:
            raise TruncationException(
                f"V_{k} to degree {degree} needs V to degree {degree + k}, got {base.precision}"
            )
        return base.derivative(f"{prefix}0", k).truncate(degree)

    def genus_zero_series(self, n_max: int, degree: int, prefix: str = "T") -> TruncatedSeries:
        self._require_truncation(n_max, degree)
        return self.repository.series.get_or_compute(
            "h0", (prefix, n_max, degree),
            lambda: _point_sum(n_max, degree, prefix, 3, 3, lambda n: Fraction(1, n * (n - 1) * (n - 2))),
        )

    def substitute(self, poly: JetPolynomial, n_max: int, degree: int, prefix: str = "T") -> TruncatedSeries:
        self._require_truncation(n_max, degree, minimum_index=0)
        alphabet = series_alphabet(prefix, n_max)
        top = poly.max_variable()
        base = self.v_series(n_max, degree + top, prefix) if top else None
        v_k = {k: self.v_k_series(k, n_max, degree, prefix, base=base) for k in poly.variables()}

        powers: Dict[Tuple[int, int], TruncatedSeries] = {}

        def power(k: int, e: int) -> TruncatedSeries:
            if (k, e) not in powers:
                powers[(k, e)] = v_k[k] ** e
            return powers[(k, e)]

        total = TruncatedSeries.zero(alphabet, degree)
        for monomial, coeff in poly:
            term = TruncatedSeries.constant(alphabet, degree, coeff)
            for k, e in monomial.exponents:
                term = term * power(k, e)
            total = total + term
        return total.truncate(degree)

    def hodge_series(self, g: int, class_tag: HodgeClass, n_max: int, degree: int) -> TruncatedSeries:
        if g < 1:
            raise DomainException(f"genus must be >= 1, got {g}")
        class_tag = HodgeClass(class_tag)
        self._require_truncation(n_max, degree, minimum_index=0)
        return self.repository.series.get_or_compute(
            f"hodge:{class_tag.value}", (g, n_max, degree),
            lambda: self._build_hodge_series(g, class_tag, n_max, degree),
        )

    def _build_hodge_series(self, g: int, class_tag: HodgeClass, n_max: int, degree: int) -> TruncatedSeries:
        self.logger.info(f"Building H_{g}({class_tag.value}) to degree {degree} in T0..T{n_max}")
        if class_tag is HodgeClass.LAMBDA_G:
            return self.v_k_series(2 * g - 2, n_max, degree).scale(lambda_g_constant(g))
        if g == 1:
            return self.v_k_series(1, n_max, degree).log().scale(Fraction(1, 24))
        return self.substitute(self.loop_zero_service.w_g(g, WFormula.THEOREM1), n_max, degree)

    def extract_integral(self, series: TruncatedSeries, indices: Sequence[int]) -> Fraction:
        indices = tuple(indices)
        if any(i < 0 for i in indices):
            raise DomainException(f"psi exponents must be >= 0, got {indices}")
        if len(indices) > series.precision:
            raise TruncationException(
                f"{len(indices)}-point integral requested from a series exact to degree {series.precision}"
            )
        width = len(series.alphabet)
        if indices and max(indices) >= width:
            raise TruncationException(f"psi exponent {max(indices)} exceeds the series alphabet {series.alphabet}")
        exps = [0] * width
        for i in indices:
            exps[i] += 1
        return prod(factorial(m) for m in exps) * series.coefficient(tuple(exps))

    def lambda_g_closed_form(self, g: int, indices: Sequence[int]) -> Fraction:
        if g < 1:
            raise DomainException(f"genus must be >= 1, got {g}")
        indices = tuple(indices)
        total = HodgeClass.LAMBDA_G.dimension(g, len(indices))
        if total < 0 or sum(indices) != total:
            return Fraction(0)
        return multinomial(total, indices) * lambda_g_constant(g)

    def theorem_a_value(self, g: int) -> Fraction:
        if g < 1:
            raise DomainException(f"genus must be >= 1, got {g}")
        value = lambda_g_constant(g) * harmonic_number(2 * g - 1)
        correction = Fraction(0)
        for g1 in range(1, g):
            g2 = g - g1
            correction += (
                (2 ** (2 * g1 - 1) - 1) * (2 ** (2 * g2 - 1) - 1)
                * abs(bernoulli(2 * g1)) / (2 * g1)
                * abs(bernoulli(2 * g2)) / (2 * g2)
            )
        return value - correction / (2 ** (2 * g - 1) * factorial(2 * g - 1))

    def hodge_table(self, g: int, class_tag: HodgeClass, max_points: int, max_psi: int) -> HodgeTable:
        class_tag = HodgeClass(class_tag)
        series = self.hodge_series(g, class_tag, max_psi, max_points)
        entries: Dict[Tuple[int, ...], Fraction] = {}
        for exps, coeff in series.terms.items():
            indices = tuple(j for j, m in enumerate(exps) for _ in range(m))
            entries[canonical_key(indices)] = prod(factorial(m) for m in exps) * coeff
        return HodgeTable(g=g, class_tag=class_tag, max_points=max_points, max_psi=max_psi, entries=entries)

    @staticmethod
    def _base_multisets(table: HodgeTable, inserted: int) -> Iterator[Tuple[int, ...]]:
        # the insertion of ``inserted`` must stay inside the table
        if inserted > table.max_psi:
            return
        for n in range(table.max_points):
            if 2 * table.g - 2 + n <= 0:
                continue
            yield from combinations_with_replacement(range(table.max_psi + 1), n)

    @staticmethod
    def _require_points(table: HodgeTable, identity: str):
        if table.max_points < 1:
            raise TruncationException(f"{identity} check needs a table with at least one point")

    def check_string(self, table: HodgeTable) -> IdentityReportModel:
        self._require_points(table, "string")
        checked = 0
        violations: List[str] = []
        for base in self._base_multisets(table, 0):
            lhs = table.entry((0,) + base)
            rhs = sum(
                (table.entry(base[:k] + (base[k] - 1,) + base[k + 1:]) for k in range(len(base)) if base[k]),
                Fraction(0),
            )
            checked += 1
            if lhs != rhs:
                violations.append(f"{canonical_key((0,) + base)}: {format_rational(lhs)} != {format_rational(rhs)}")
        return IdentityReportModel(
            identity="string", g=table.g, class_tag=table.class_tag.value, checked=checked, violations=violations
        )

    def check_dilaton(self, table: HodgeTable) -> IdentityReportModel:
        self._require_points(table, "dilaton")
        checked = 0
        violations: List[str] = []
        for base in self._base_multisets(table, 1):
            lhs = table.entry((1,) + base)
            rhs = (2 * table.g - 2 + len(base)) * table.entry(base)
            checked += 1
            if lhs != rhs:
                violations.append(f"{canonical_key((1,) + base)}: {format_rational(lhs)} != {format_rational(rhs)}")
        return IdentityReportModel(
            identity="dilaton", g=table.g, class_tag=table.class_tag.value, checked=checked, violations=violations
        )
