from commands.output import add_format_argument, emit, emit_csv, emit_model
from dependencies import hodge_series_service
from models import CommandModel, HodgeClass, TheoremAValueModel
from utils.formatting import format_rational


def register(subparsers) -> None:
    hodge = subparsers.add_parser("hodge", help="Table of psi-lambda Hodge integrals")
    hodge.add_argument("-g", type=int, required=True, help="Genus, g >= 1")
    hodge.add_argument("--class", dest="class_tag", choices=[c.value for c in HodgeClass], required=True)
    hodge.add_argument("--max-points", type=int, required=True, help="Largest number of marked points")
    hodge.add_argument("--max-psi", type=int, required=True, help="Largest psi exponent at one point")
    add_format_argument(hodge, default="csv")
    hodge.set_defaults(handler=run_hodge)

    theorem_a = subparsers.add_parser("theorem-a", help="One-point lambda_(g-1) integral in closed form")
    theorem_a.add_argument("-g", type=int, required=True, help="Genus, g >= 1")
    add_format_argument(theorem_a)
    theorem_a.set_defaults(handler=run_theorem_a)


def run_hodge(command: CommandModel) -> int:
    options = command.options
    table = hodge_series_service.hodge_table(
        options["g"], HodgeClass(options["class_tag"]), options["max_points"], options["max_psi"]
    )
    if command.output_format == "json":
        emit_model(table.to_output())
    elif command.output_format == "csv":
        emit(table.to_csv())
    else:
        rows = table.to_output().root
        emit("\n".join(f"({row.indices}) {row.value}" for row in rows) or "(empty)")
    return 0


def run_theorem_a(command: CommandModel) -> int:
    g = command.options["g"]
    value = format_rational(hodge_series_service.theorem_a_value(g))
    if command.output_format == "json":
        emit_model(TheoremAValueModel(g=g, value=value))
    elif command.output_format == "csv":
        emit_csv(["g", "value"], [(g, value)])
    else:
        emit(value)
    return 0
