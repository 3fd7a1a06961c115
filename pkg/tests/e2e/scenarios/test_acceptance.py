import json
from fractions import Fraction

import pytest

from algebra import Grading
from main import main
from models import CurveTargetModel, HodgeClass, WFormula
from services.implementation.loop_zero_service import is_identity, jet_matmul


pytestmark = pytest.mark.e2e


def test_w2_golden(loop_zero_service, w2_expected):
    assert loop_zero_service.w_g(2) == w2_expected


def test_w3_golden(loop_zero_service, w3_expected):
    assert loop_zero_service.w_g(3) == w3_expected


@pytest.mark.parametrize("g", range(2, 7))
def test_formula_equivalence(loop_zero_service, g):
    assert loop_zero_service.w_g(g, WFormula.THEOREM1) == loop_zero_service.w_g(g, WFormula.EQUIVALENT)


@pytest.mark.parametrize("g", range(1, 7))
def test_matrix_inverse(loop_zero_service, g):
    matrix = loop_zero_service.m_matrix(g)
    closed = loop_zero_service.m_inverse_closed(g)
    assert is_identity(jet_matmul(matrix, closed))
    assert is_identity(jet_matmul(closed, matrix))
    assert closed == loop_zero_service.m_inverse_solved(g)


@pytest.mark.parametrize("g", range(1, 6))
def test_loop_residual(loop_zero_service, g):
    assert loop_zero_service.loop_residual(g).is_zero()


@pytest.mark.parametrize("g", range(2, 7))
def test_dilaton_grading(loop_zero_service, g):
    w = loop_zero_service.w_g(g)
    assert w.euler(Grading.DILATON) == w * (2 * g - 2)


@pytest.mark.slow
def test_lambda_g_closed_form(capsys):
    assert main(["verify", "--suite", "lambda-g", "--gmax", "4"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "lambda-g: ok"


@pytest.mark.parametrize("g,value", [(1, Fraction(1, 24)), (2, Fraction(1, 480)), (3, Fraction(41, 580608))])
def test_one_point_lambda_gm1(hodge_series_service, loop_zero_service, g, value):
    assert hodge_series_service.theorem_a_value(g) == value
    series = hodge_series_service.hodge_series(g, HodgeClass.LAMBDA_GM1, 2 * g - 1, 1)
    assert hodge_series_service.extract_integral(series, (2 * g - 1,)) == value
    if g > 1:
        assert loop_zero_service.w_g(g).coefficient({2 * g - 1: 1, 1: -1}) == value


def test_theorem_a_suite_to_genus_four(capsys):
    assert main(["verify", "--suite", "theorem-a", "--gmax", "4"]) == 0


@pytest.mark.slow
def test_string_dilaton_to_genus_four(capsys):
    assert main(["verify", "--suite", "string-dilaton", "--gmax", "4", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert len(report["results"]) == 16


def test_dimension_vanishing(capsys):
    assert main(["verify", "--suite", "dimension", "--gmax", "3"]) == 0


def test_eisenstein_cross_check(curve_service):
    values = {tuple(item.partition): item.corollary_value for item in curve_service.eisenstein_constant_check()}
    assert values == {(0,): "0", (2,): "7/5760", (1, 1): "0"}


@pytest.mark.slow
def test_dual_v_oracle(hodge_series_service):
    for n_max in range(6):
        assert hodge_series_service.v_series(n_max, 10) == hodge_series_service.v_fixed_point_oracle(n_max, 10)


@pytest.mark.slow
@pytest.mark.parametrize("g", [1, 2, 3])
def test_buryak_consistency(curve_service, g):
    elliptic = CurveTargetModel(h=1)
    assert curve_service.free_energy_deg0(g, elliptic, 3, 8).series == curve_service.buryak_expansion(g, 3, 8)


@pytest.mark.slow
def test_w8_scaling(loop_zero_service):
    w = loop_zero_service.w_g(8)
    assert w.euler(Grading.DILATON) == w * 14
    assert loop_zero_service.w_g(8, WFormula.EQUIVALENT) == w
