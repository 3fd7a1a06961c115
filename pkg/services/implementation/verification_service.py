import asyncio
import json
import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Callable, Dict, List, Sequence

from algebra import (
    Grading,
    JetPolynomial,
    Partition,
    bernoulli,
    enumerate_partitions,
    lagrange_number,
    lambda_g_constant,
    partition_count,
)
from models import CheckResultModel, CurveTargetModel, HodgeClass, VerificationReportModel, WFormula
from services.implementation.loop_zero_service import is_identity, jet_matmul
from services.interfaces.curve_service_interface import ICurveService
from services.interfaces.hodge_series_service_interface import IHodgeSeriesService
from services.interfaces.loop_zero_service_interface import ILoopZeroService
from services.interfaces.verification_service_interface import IVerificationService
from utils.exceptions import DomainException, HodgeException
from utils.formatting import format_rational

audit_logger = logging.getLogger("audit")

SUITES = (
    "kernel",
    "jet",
    "pole",
    "matrix",
    "formula",
    "loop",
    "grading",
    "structure",
    "lambda-g",
    "v-oracle",
    "dimension",
    "string-dilaton",
    "theorem-a",
    "eisenstein",
    "buryak",
    "h-linearity",
    "stationary",
    "q-linear",
)

# (N, D) pairs on which the two constructions of V(T) are compared
V_ORACLE_GRID = ((0, 4), (1, 6), (2, 6), (4, 8), (5, 10))

# Buryak, h-linearity and Q-linear checks stop at genus three
CURVE_GMAX = 3
BURYAK_TRUNCATION = (3, 8)
H_LINEARITY_TRUNCATION = (2, 5)
Q_LINEAR_TRUNCATION = (2, 4)


def _result(suite: str, name: str, passed: bool, detail: str = "") -> CheckResultModel:
    return CheckResultModel(suite=suite, name=name, passed=bool(passed), detail=detail)


class VerificationService(IVerificationService):
    def __init__(self, loop_zero_service: ILoopZeroService, hodge_series_service: IHodgeSeriesService,
                 curve_service: ICurveService, workers: int = 4):
        self.logger = logging.getLogger("app")
        self.loop_zero_service = loop_zero_service
        self.hodge_series_service = hodge_series_service
        self.curve_service = curve_service
        self.workers = max(1, workers)
        self.suites: Dict[str, Callable[[int], List[CheckResultModel]]] = {
            "kernel": self._kernel_suite,
            "jet": self._jet_suite,
            "pole": self._pole_suite,
            "matrix": self._matrix_suite,
            "formula": self._formula_suite,
            "loop": self._loop_suite,
            "grading": self._grading_suite,
            "structure": self._structure_suite,
            "lambda-g": self._lambda_g_suite,
            "v-oracle": self._v_oracle_suite,
            "dimension": self._dimension_suite,
            "string-dilaton": self._string_dilaton_suite,
            "theorem-a": self._theorem_a_suite,
            "eisenstein": self._eisenstein_suite,
            "buryak": self._buryak_suite,
            "h-linearity": self._h_linearity_suite,
            "stationary": self._stationary_suite,
            "q-linear": self._q_linear_suite,
        }

    def resolve_suites(self, suites: Sequence[str]) -> List[str]:
        resolved: List[str] = []
        for name in suites:
            expanded = SUITES if name == "all" else (name,)
            for suite in expanded:
                if suite not in self.suites:
                    raise DomainException(f"unknown verification suite: {suite}")
                if suite not in resolved:
                    resolved.append(suite)
        if not resolved:
            raise DomainException("no verification suite requested")
        return resolved

    async def run(self, suites: Sequence[str], gmax: int = 4) -> VerificationReportModel:
        if gmax < 1:
            raise DomainException(f"gmax must be >= 1, got {gmax}")
        names = self.resolve_suites(suites)
        self.logger.info(f"Running verification suites {names} with gmax={gmax} on {self.workers} workers")

        semaphore = asyncio.Semaphore(self.workers)

        async def run_one(name: str) -> List[CheckResultModel]:
            async with semaphore:
                try:
                    return await asyncio.to_thread(self.suites[name], gmax)
                except HodgeException as e:
                    self.logger.error(f"Suite {name} aborted: {e}")
                    return [_result(name, "aborted", False, str(e))]

        # gather keeps request order whatever the completion order
        batches = await asyncio.gather(*(run_one(name) for name in names))
        results = [result for batch in batches for result in batch]
        for result in results:
            audit_logger.info(json.dumps({"event": "verify_check", **result.model_dump()}, sort_keys=True, default=str))
        return VerificationReportModel(gmax=gmax, suites=names, results=results)

    # suites

    def _kernel_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        for n, expected in ((2, Fraction(1, 6)), (4, Fraction(-1, 30)), (6, Fraction(1, 42)), (8, Fraction(-1, 30))):
            value = bernoulli(n)
            results.append(_result("kernel", f"B_{n}", value == expected, format_rational(value)))
        for g, expected in ((1, Fraction(1, 24)), (2, Fraction(7, 5760)), (3, Fraction(31, 967680))):
            value = lambda_g_constant(g)
            results.append(_result("kernel", f"b_{g}", value == expected, format_rational(value)))
        for k in range(2 * gmax + 1):
            listed = enumerate_partitions(k)
            ok = partition_count(k) == len(listed) == len(set(listed)) and all(mu.weight == k for mu in listed)
            results.append(_result("kernel", f"p({k})", ok, str(len(listed))))
        results.append(_result("kernel", "L((1))", lagrange_number(Partition((1,))) == -1))
        return results

    def _jet_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        for g in range(1, gmax + 1):
            degrees = {
                j: coefficient.is_homogeneous(2 * g - 2, Grading.DEGREE)
                for j, coefficient in self.loop_zero_service.b_coefficients(g).items() if coefficient
            }
            results.append(_result("jet", f"B_{g},j homogeneous of degree {2 * g - 2}", all(degrees.values())))
        for g in range(2, gmax + 1):
            w = self.loop_zero_service.w_g(g)
            n_max, degree = 2 * g - 1, 2
            lhs = self.hodge_series_service.substitute(w.derive(), n_max, degree)
            rhs = self.hodge_series_service.substitute(w, n_max, degree + 1).derivative("T0").truncate(degree)
            results.append(_result("jet", f"d intertwines with d/dT0 on W_{g}", lhs == rhs))
        return results

    def _pole_suite(self, gmax: int) -> List[CheckResultModel]:
        matrix = self.loop_zero_service.m_matrix(gmax)
        size = len(matrix)
        first_row = all(matrix[0][r - 1] == JetPolynomial.variable(r) for r in range(1, size + 1))
        triangular = all(not matrix[j][r] for j in range(size) for r in range(j))
        diagonal = all(
            matrix[r - 1][r - 1] == JetPolynomial.monomial(factorial(r), {1: r}) for r in range(1, size + 1)
        )
        return [
            _result("pole", f"M_(1,r) = V_r up to r={size}", first_row),
            _result("pole", f"M upper triangular, size {size}", triangular),
            _result("pole", f"M_(r,r) = r! V_1^r up to r={size}", diagonal),
        ]

    def _matrix_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        for g in range(1, gmax + 1):
            matrix = self.loop_zero_service.m_matrix(g)
            closed = self.loop_zero_service.m_inverse_closed(g)
            solved = self.loop_zero_service.m_inverse_solved(g)
            results.append(_result("matrix", f"g={g} M*Minv = I", is_identity(jet_matmul(matrix, closed))))
            results.append(_result("matrix", f"g={g} Minv*M = I", is_identity(jet_matmul(closed, matrix))))
            results.append(_result("matrix", f"g={g} closed Minv = solved Minv", closed == solved))
        return results

    def _formula_suite(self, gmax: int) -> List[CheckResultModel]:
        return [
            _result(
                "formula", f"g={g} theorem1 = equivalent",
                self.loop_zero_service.w_g(g, WFormula.THEOREM1) == self.loop_zero_service.w_g(g, WFormula.EQUIVALENT),
            )
            for g in range(2, gmax + 1)
        ]

    def _loop_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        for g in range(1, gmax + 1):
            residual = self.loop_zero_service.loop_residual(g)
            results.append(_result("loop", f"g={g} residual vanishes", residual.is_zero(), residual.render()[:200]))
        return results

    def _grading_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        for g in range(2, gmax + 1):
            w = self.loop_zero_service.w_g(g)
            results.append(_result("grading", f"g={g} dilaton grading 2g-2", w.euler(Grading.DILATON) == w * (2 * g - 2)))
            gradient = self.loop_zero_service.solve_gradient(g)
            formal = [w.partial(k) for k in range(1, 2 * g)]
            results.append(_result("grading", f"g={g} solved gradient = formal gradient", gradient == formal))
        return results

    def _structure_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        for g in range(2, gmax + 1):
            try:
                coefficients = self.loop_zero_service.w_g_coefficients(g)
            except DomainException as e:
                results.append(_result("structure", f"g={g} monomial shape", False, str(e)))
                continue
            rebuilt = JetPolynomial.zero()
            for mu, value in coefficients.items():
                exponents = {1: -mu.length}
                for part in mu.shifted():
                    exponents[part] = exponents.get(part, 0) + 1
                rebuilt = rebuilt + JetPolynomial.monomial(value, exponents)
            results.append(_result(
                "structure", f"g={g} W_g = sum c_mu V_(mu+1)/V1^l(mu)",
                rebuilt == self.loop_zero_service.w_g(g),
                f"{len(coefficients)} of {partition_count(2 * g - 2)} partitions",
            ))
        return results

    def _lambda_g_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        max_points = 4
        for g in range(1, gmax + 1):
            max_psi = HodgeClass.LAMBDA_G.dimension(g, max_points)
            table = self.hodge_series_service.hodge_table(g, HodgeClass.LAMBDA_G, max_points, max_psi)
            checked, mismatches = 0, []
            for n in range(max_points + 1):
                for indices in combinations_with_replacement(range(max_psi + 1), n):
                    checked += 1
                    if table.entry(indices) != self.hodge_series_service.lambda_g_closed_form(g, indices):
                        mismatches.append(str(indices))
            results.append(_result(
                "lambda-g", f"g={g} series = closed form ({checked} multisets)", not mismatches, " ".join(mismatches[:10])
            ))
        return results

    def _v_oracle_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        for n_max, degree in V_ORACLE_GRID:
            direct = self.hodge_series_service.v_series(n_max, degree)
            iterated = self.hodge_series_service.v_fixed_point_oracle(n_max, degree)
            results.append(_result("v-oracle", f"N={n_max} D={degree}", direct == iterated, f"{len(direct)} terms"))
        return results

    def _dimension_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        max_points = 3
        for g in range(1, min(gmax, 3) + 1):
            for class_tag in HodgeClass:
                max_psi = class_tag.dimension(g, max_points) + 1
                table = self.hodge_series_service.hodge_table(g, class_tag, max_points, max_psi)
                stray = [key for key in table.entries if sum(key) != class_tag.dimension(g, len(key))]
                results.append(_result(
                    "dimension", f"g={g} {class_tag.value} off-dimension entries vanish", not stray, str(stray[:10])
                ))
        return results

    def _string_dilaton_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        max_points = 3
        for g in range(1, gmax + 1):
            for class_tag in HodgeClass:
                table = self.hodge_series_service.hodge_table(
                    g, class_tag, max_points, class_tag.dimension(g, max_points)
                )
                for report in (self.hodge_series_service.check_string(table),
                               self.hodge_series_service.check_dilaton(table)):
                    results.append(_result(
                        "string-dilaton", f"g={g} {class_tag.value} {report.identity} ({report.checked} checked)",
                        report.passed, "; ".join(report.violations[:5]),
                    ))
        return results

    def _theorem_a_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        for g in range(1, gmax + 1):
            closed = self.hodge_series_service.theorem_a_value(g)
            series = self.hodge_series_service.hodge_series(g, HodgeClass.LAMBDA_GM1, 2 * g - 1, 1)
            extracted = self.hodge_series_service.extract_integral(series, (2 * g - 1,))
            if g == 1:
                coefficient = Fraction(1, 24)
            else:
                coefficient = self.loop_zero_service.w_g(g).coefficient({2 * g - 1: 1, 1: -1})
            singular = self.loop_zero_service.most_singular_coefficient(g) / factorial(2 * g - 1)
            values = {closed, extracted, coefficient, singular}
            results.append(_result(
                "theorem-a", f"g={g} closed = extracted = W coefficient = singular part",
                len(values) == 1, format_rational(closed),
            ))
        return results

    def _eisenstein_suite(self, gmax: int) -> List[CheckResultModel]:
        return [
            _result(
                "eisenstein", f"C_{tuple(item.partition)}(0)", item.agrees,
                f"{item.eisenstein_value} vs {item.corollary_value}",
            )
            for item in self.curve_service.eisenstein_constant_check()
        ]

    def _buryak_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        elliptic = CurveTargetModel(h=1)
        n_max, degree = BURYAK_TRUNCATION
        for g in range(1, min(gmax, CURVE_GMAX) + 1):
            free_energy = self.curve_service.free_energy_deg0(g, elliptic, n_max, degree).series
            expansion = self.curve_service.buryak_expansion(g, n_max, degree)
            results.append(_result(
                "buryak", f"g={g} elliptic F_g = stationary expansion to degree {degree}", free_energy == expansion
            ))
        return results

    def _h_linearity_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        n_max, degree = H_LINEARITY_TRUNCATION
        for g in range(1, min(gmax, CURVE_GMAX) + 1):
            f0, f1, f2 = (
                self.curve_service.free_energy_deg0(g, CurveTargetModel(h=h), n_max, degree).series for h in (0, 1, 2)
            )
            slope = self.curve_service.target_term(g, n_max, degree).scale(2)
            results.append(_result("h-linearity", f"g={g} affine in h", (f0 - f1 * 2 + f2).is_zero()))
            results.append(_result("h-linearity", f"g={g} slope is the target term", f0 - f1 == slope))
        return results

    def _q_linear_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        n_max, degree = Q_LINEAR_TRUNCATION
        q_names = [f"Q{i}" for i in range(n_max + 1)]
        for g in range(2, min(gmax, CURVE_GMAX) + 1):
            # B_{g,2} = 2g b_g V_{2g-2} fixes the weight of U_{2g-2} in F_g
            b_2 = self.loop_zero_service.b_coefficients(g)[2]
            weight = (-1) ** g * b_2.coefficient({2 * g - 2: 1}) / (2 * g)
            linear = self.curve_service.u_derivative(2 * g - 2, n_max, degree).scale(weight)
            target_term = self.curve_service.target_term(g, n_max, degree).truncate(degree)
            for h in (0, 1, 2):
                target = CurveTargetModel(h=h)
                series = self.curve_service.free_energy_deg0(g, target, n_max, degree).series
                results.append(_result(
                    "q-linear", f"g={g} h={h} Q-linear part is {format_rational(weight)} U_{2 * g - 2}",
                    series.graded_part(q_names, 1) == linear,
                ))
                results.append(_result(
                    "q-linear", f"g={g} h={h} Q-free part is chi times the target term",
                    series.graded_part(q_names, 0) == target_term.scale(target.euler_characteristic),
                ))
        return results

    def _stationary_suite(self, gmax: int) -> List[CheckResultModel]:
        results = []
        for g in range(1, gmax + 1):
            expected = self.curve_service.c_elliptic_constant((2 * g - 2,)) - (Fraction(1, 24) if g == 1 else 0)
            for h in (0, 1, 2):
                target = CurveTargetModel(h=h)
                value = self.curve_service.stationary_constant(g, target)
                n_max = 2 * g - 2
                series = self.curve_service.free_energy_deg0(g, target, n_max, 2).series
                pure_q = series.restrict([f"P{i}" for i in range(n_max + 1)])
                only_leading = set(pure_q.terms) <= {pure_q.exponents_of({f"Q{n_max}": 1})}
                results.append(_result(
                    "stationary", f"g={g} h={h} Q_{n_max} coefficient", value == expected and only_leading,
                    format_rational(value),
                ))
        return results
