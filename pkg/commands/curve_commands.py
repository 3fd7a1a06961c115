import re
from typing import Tuple

from commands.output import add_format_argument, emit, emit_csv, emit_model
from dependencies import curve_service
from models import CommandModel, CurveTargetModel, StationaryConstantModel
from utils.exceptions import DomainException
from utils.formatting import format_rational


def register(subparsers) -> None:
    fe = subparsers.add_parser("fe", help="Degree-zero free energy of a genus-h curve")
    fe.add_argument("-g", type=int, required=True, help="Genus, g >= 0")
    fe.add_argument("--target-genus", type=int, default=0, help="Genus h of the target curve")
    fe.add_argument("--order", type=int, default=6, help="Total-degree truncation D in P and Q")
    fe.add_argument("--max-index", type=int, default=4, help="Largest descendant index N")
    add_format_argument(fe)
    fe.set_defaults(handler=run_fe)

    constants = subparsers.add_parser("constants", help="Elliptic stationary constants C^E_lambda(0)")
    group = constants.add_mutually_exclusive_group(required=True)
    group.add_argument("--partition", help='Insertion profile, e.g. "2" or "1 1"')
    group.add_argument("--eisenstein", action="store_true", help="Compare with the Eisenstein expressions")
    add_format_argument(constants)
    constants.set_defaults(handler=run_constants)


def parse_profile(text: str) -> Tuple[int, ...]:
    tokens = [token for token in re.split(r"[\s,]+", text.strip()) if token]
    try:
        parts = tuple(int(token) for token in tokens)
    except ValueError:
        raise DomainException(f"partition must list non-negative integers, got {text!r}") from None
    if any(p < 0 for p in parts):
        raise DomainException(f"partition must list non-negative integers, got {text!r}")
    return tuple(sorted(parts, reverse=True))


def run_fe(command: CommandModel) -> int:
    options = command.options
    try:
        target = CurveTargetModel(h=options["target_genus"])
    except ValueError:
        raise DomainException(f"target genus must be >= 0, got {options['target_genus']}") from None
    free_energy = curve_service.free_energy_deg0(options["g"], target, options["max_index"], options["order"])
    if command.output_format == "json":
        emit_model(free_energy.to_output())
    elif command.output_format == "csv":
        output = free_energy.to_output()
        emit_csv(["g", "h", "monomial", "value"], ((output.g, output.h, t.monomial, t.value) for t in output.terms))
    else:
        emit(free_energy.series.render())
    return 0


def run_constants(command: CommandModel) -> int:
    if command.options.get("eisenstein"):
        comparisons = curve_service.eisenstein_constant_check()
        if command.output_format == "json":
            emit("[\n" + ",\n".join(c.model_dump_json(indent=2) for c in comparisons) + "\n]")
        elif command.output_format == "csv":
            emit_csv(["partition", "eisenstein", "corollary", "agrees"], (
                (" ".join(map(str, c.partition)), c.eisenstein_value, c.corollary_value, c.agrees)
                for c in comparisons
            ))
        else:
            emit("\n".join(
                f"({','.join(map(str, c.partition))}) {c.eisenstein_value} {'ok' if c.agrees else 'MISMATCH'}"
                for c in comparisons
            ))
        return 0 if all(c.agrees for c in comparisons) else 1

    parts = parse_profile(command.options["partition"])
    weight = sum(parts)
    value = format_rational(curve_service.c_elliptic_constant(parts))
    genus = None if weight % 2 else weight // 2 + 1
    if command.output_format == "json":
        emit_model(StationaryConstantModel(partition=list(parts), g=genus, value=value))
    elif command.output_format == "csv":
        emit_csv(["partition", "g", "value"], [(" ".join(map(str, parts)), "" if genus is None else genus, value)])
    else:
        emit(value)
    return 0
