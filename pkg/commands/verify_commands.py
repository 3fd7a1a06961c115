import asyncio
from collections import OrderedDict

from commands.output import add_format_argument, emit, emit_csv, emit_model
from dependencies import verification_service
from models import CommandModel
from services.implementation.verification_service import SUITES


def register(subparsers) -> None:
    verify = subparsers.add_parser("verify", help="Run verification suites")
    verify.add_argument("--suite", nargs="+", choices=SUITES + ("all",), default=["all"],
                        help="Suites to run (default: all)")
    verify.add_argument("--gmax", type=int, default=4, help="Largest genus probed (default: 4)")
    add_format_argument(verify)
    verify.set_defaults(handler=run_verify)


def run_verify(command: CommandModel) -> int:
    report = asyncio.run(verification_service.run(command.options["suite"], command.options["gmax"]))
    if command.output_format == "json":
        emit_model(report)
    elif command.output_format == "csv":
        emit_csv(["suite", "name", "passed", "detail"], (
            (r.suite, r.name, r.passed, r.detail.replace(",", ";")) for r in report.results
        ))
    else:
        lines = [f"{'ok  ' if r.passed else 'FAIL'} {r.suite}: {r.name}" + ("" if r.passed else f" [{r.detail}]")
                 for r in report.results]
        per_suite = OrderedDict((suite, True) for suite in report.suites)
        for r in report.results:
            per_suite[r.suite] = per_suite[r.suite] and r.passed
        lines.extend(f"{suite}: {'ok' if passed else 'FAIL'}" for suite, passed in per_suite.items())
        emit("\n".join(lines))
    return 0 if report.passed else 1
