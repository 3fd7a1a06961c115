from enum import Enum
from fractions import Fraction
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, RootModel

from utils.exceptions import TruncationException
from utils.formatting import format_indices, format_rational

CSV_HEADER = ("g", "class", "indices", "value")


class HodgeClass(str, Enum):
    LAMBDA_G = "lambda_g"
    LAMBDA_GM1 = "lambda_gm1"

    def dimension(self, g: int, n: int) -> int:
        """Total psi degree for which the integral can be nonzero"""
        return 2 * g - 3 + n if self is HodgeClass.LAMBDA_G else 2 * g - 2 + n


def canonical_key(indices) -> Tuple[int, ...]:
    """Multiset key: indices sorted descending"""
    return tuple(sorted(indices, reverse=True))


class HodgeTable(BaseModel):
    """
    Exact psi-lambda integrals over M_{g,n} for every index multiset with
    n <= max_points and every index <= max_psi. Only nonzero entries are stored.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    g: int = Field(ge=1)
    class_tag: HodgeClass
    max_points: int = Field(ge=0)
    max_psi: int = Field(ge=0)
    entries: Dict[Tuple[int, ...], Fraction]

    def covers(self, indices) -> bool:
        indices = tuple(indices)
        return len(indices) <= self.max_points and all(0 <= i <= self.max_psi for i in indices)

    def entry(self, indices) -> Fraction:
        if not self.covers(indices):
            raise TruncationException(
                f"indices {tuple(indices)} fall outside the table "
                f"(max_points={self.max_points}, max_psi={self.max_psi})"
            )
        return self.entries.get(canonical_key(indices), Fraction(0))

    def to_output(self) -> "HodgeTableModel":
        """Rows ordered by number of points, then by index multiset"""
        rows = [
            HodgeEntryModel(g=self.g, class_tag=self.class_tag.value, indices=format_indices(key),
                            value=format_rational(value))
            for key, value in sorted(self.entries.items(), key=lambda item: (len(item[0]), item[0]))
        ]
        return HodgeTableModel(rows)

    def to_csv(self) -> str:
        lines = [",".join(CSV_HEADER)]
        for row in self.to_output().root:
            lines.append(f"{row.g},{row.class_tag},{row.indices},{row.value}")
        return "\n".join(lines) + "\n"


class HodgeEntryModel(BaseModel):
    """One CSV row; the JSON form uses the same field names"""
    model_config = ConfigDict(populate_by_name=True)

    g: int
    class_tag: str = Field(alias="class")
    indices: str = Field(description="Space-separated, descending")
    value: str


class HodgeTableModel(RootModel[List[HodgeEntryModel]]):
    model_config = ConfigDict(
        json_schema_extra={
            "example": [
                {"g": 2, "class": "lambda_gm1", "indices": "3", "value": "1/480"},
                {"g": 2, "class": "lambda_gm1", "indices": "3 1", "value": "1/160"},
                {"g": 2, "class": "lambda_gm1", "indices": "4 0", "value": "1/480"},
            ]
        }
    )
