import json
import sys
from typing import Iterable, List, Sequence

from pydantic import BaseModel

from algebra import JetPolynomial
from models import JetTermModel

FORMATS = ("text", "json", "csv")


def emit(text: str) -> None:
    """Write one result block to stdout; logs never go there"""
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def emit_model(model: BaseModel) -> None:
    """Optional fields left unset are omitted"""
    emit(json.dumps(model.model_dump(by_alias=True, exclude_none=True), indent=2))


def emit_csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(str(cell) for cell in row) for row in rows)
    emit("\n".join(lines))


def jet_terms(poly: JetPolynomial) -> List[JetTermModel]:
    return [JetTermModel(**term) for term in poly.to_terms()]


def add_format_argument(parser, default: str = "text") -> None:
    parser.add_argument("--format", dest="output_format", choices=FORMATS, default=default,
                        help=f"Output format (default: {default})")
