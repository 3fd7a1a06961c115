from commands.output import add_format_argument, emit, emit_csv, emit_model, jet_terms
from dependencies import loop_zero_service
from models import (
    BCoefficientModel,
    BCoefficientsModel,
    CommandModel,
    MatrixModel,
    PartitionCoefficientModel,
    WFormula,
    WFunctionModel,
)
from utils.formatting import format_rational


def register(subparsers) -> None:
    wg = subparsers.add_parser("wg", help="Universal function W_g")
    wg.add_argument("-g", type=int, required=True, help="Genus, g >= 2")
    wg.add_argument("--formula", choices=[f.value for f in WFormula], default=WFormula.THEOREM1.value)
    wg.add_argument("--by-partition", action="store_true", help="List the constants c^g_mu instead")
    add_format_argument(wg)
    wg.set_defaults(handler=run_wg)

    bg = subparsers.add_parser("bg", help="Coefficients B_{g,j} of the degree-zero loop equation")
    bg.add_argument("-g", type=int, required=True, help="Genus, g >= 1")
    add_format_argument(bg)
    bg.set_defaults(handler=run_bg)

    matrix = subparsers.add_parser("matrix", help="Triangular system M or its inverse")
    matrix.add_argument("-g", type=int, required=True, help="Genus, g >= 1")
    matrix.add_argument("--inverse", action="store_true", help="Print the closed-form inverse")
    add_format_argument(matrix)
    matrix.set_defaults(handler=run_matrix)


def run_wg(command: CommandModel) -> int:
    g = command.options["g"]
    formula = WFormula(command.options.get("formula", WFormula.THEOREM1.value))
    w = loop_zero_service.w_g(g, formula)

    coefficients = []
    if command.options.get("by_partition"):
        coefficients = [
            PartitionCoefficientModel(
                partition=list(mu.parts),
                monomial="*".join([f"V{p}" for p in mu.shifted()] + [f"V1^-{mu.length}"]),
                value=format_rational(value),
            )
            for mu, value in sorted(loop_zero_service.w_g_coefficients(g).items())
        ]

    if command.output_format == "json":
        emit_model(WFunctionModel(g=g, w=jet_terms(w), formula=formula.value, coefficients=coefficients or None))
    elif command.output_format == "csv":
        if coefficients:
            emit_csv(["g", "partition", "value"],
                     ((g, " ".join(map(str, c.partition)), c.value) for c in coefficients))
        else:
            emit_csv(["g", "monomial", "coeff"],
                     ((g, monomial.render(), format_rational(coeff)) for monomial, coeff in w.sorted_terms()))
    elif coefficients:
        emit("\n".join(f"({','.join(map(str, c.partition))}) {c.value}" for c in coefficients))
    else:
        emit(w.render())
    return 0


def run_bg(command: CommandModel) -> int:
    g = command.options["g"]
    coefficients = loop_zero_service.b_coefficients(g)
    if command.output_format == "json":
        emit_model(BCoefficientsModel(
            g=g, coefficients=[BCoefficientModel(j=j, terms=jet_terms(p)) for j, p in sorted(coefficients.items())],
        ))
    elif command.output_format == "csv":
        emit_csv(["g", "j", "polynomial"], ((g, j, p.render()) for j, p in sorted(coefficients.items())))
    else:
        emit("\n".join(f"B_{g},{j} = {p.render()}" for j, p in sorted(coefficients.items())))
    return 0


def run_matrix(command: CommandModel) -> int:
    g = command.options["g"]
    inverse = command.options.get("inverse", False)
    rows = loop_zero_service.m_inverse_closed(g) if inverse else loop_zero_service.m_matrix(g)
    kind = "Minv" if inverse else "M"
    if command.output_format == "json":
        emit_model(MatrixModel(g=g, kind=kind, rows=[[jet_terms(entry) for entry in row] for row in rows]))
    elif command.output_format == "csv":
        emit_csv(["i", "j", "entry"], (
            (i, j, entry.render())
            for i, row in enumerate(rows, start=1)
            for j, entry in enumerate(row, start=1)
        ))
    else:
        emit("\n".join(" | ".join(entry.render() for entry in row) for row in rows))
    return 0
