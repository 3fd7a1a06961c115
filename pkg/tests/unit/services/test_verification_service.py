import json

import pytest

from services.implementation.verification_service import SUITES
from utils.exceptions import DomainException, TruncationException


pytestmark = [pytest.mark.unit, pytest.mark.service]


def test_resolve_suites(verification_service):
    assert verification_service.resolve_suites(["all"]) == list(SUITES)
    assert verification_service.resolve_suites(["loop", "kernel", "loop"]) == ["loop", "kernel"]
    with pytest.raises(DomainException):
        verification_service.resolve_suites(["nope"])
    with pytest.raises(DomainException):
        verification_service.resolve_suites([])


@pytest.mark.asyncio
async def test_run_keeps_request_order(verification_service):
    report = await verification_service.run(["pole", "kernel", "matrix"], gmax=2)
    assert report.suites == ["pole", "kernel", "matrix"]
    seen = []
    for result in report.results:
        if result.suite not in seen:
            seen.append(result.suite)
    assert seen == ["pole", "kernel", "matrix"]
    assert report.passed, report.failures()


@pytest.mark.asyncio
@pytest.mark.parametrize("suite", ["formula", "loop", "grading", "structure", "theorem-a", "eisenstein", "v-oracle"])
async def test_algebraic_suites_pass(verification_service, suite):
    report = await verification_service.run([suite], gmax=3)
    assert report.results
    assert report.passed, report.failures()


@pytest.mark.asyncio
@pytest.mark.parametrize("suite", ["lambda-g", "dimension", "string-dilaton", "stationary"])
async def test_hodge_suites_pass(verification_service, suite):
    report = await verification_service.run([suite], gmax=2)
    assert report.passed, report.failures()


@pytest.mark.asyncio
async def test_q_linear_suite(verification_service):
    report = await verification_service.run(["q-linear"], gmax=2)
    assert len(report.results) == 6
    assert report.passed, report.failures()
    assert report.results[0].name == "g=2 h=0 Q-linear part is 7/5760 U_2"


@pytest.mark.asyncio
async def test_aborted_suite_is_a_failure(verification_service):
    def broken(gmax):
        raise TruncationException("not enough precision")

    verification_service.suites["kernel"] = broken
    report = await verification_service.run(["kernel", "pole"], gmax=2)
    assert not report.passed
    [failure] = report.failures()
    assert failure.suite == "kernel" and failure.name == "aborted"
    assert failure.detail == "not enough precision"


@pytest.mark.asyncio
async def test_run_rejects_bad_gmax(verification_service):
    with pytest.raises(DomainException):
        await verification_service.run(["kernel"], gmax=0)


@pytest.mark.asyncio
async def test_checks_are_audited(verification_service, mocker):
    audit_logger = mocker.patch("services.implementation.verification_service.audit_logger")
    report = await verification_service.run(["pole"], gmax=2)
    assert audit_logger.info.call_count == len(report.results)
    record = json.loads(audit_logger.info.call_args_list[0].args[0])
    assert record["event"] == "verify_check"
    assert record["suite"] == "pole"
    assert record["passed"] is True
