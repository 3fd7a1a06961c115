from enum import Enum
from typing import Dict, List, Literal, Optional
from pydantic import BaseModel, ConfigDict, Field


class WFormula(str, Enum):
    THEOREM1 = "theorem1"
    EQUIVALENT = "equivalent"


class JetTermModel(BaseModel):
    coeff: str = Field(description='Reduced rational "p/q" or "p"')
    exps: Dict[str, int] = Field(description="Variable index -> exponent, V1 may be negative")


class PartitionCoefficientModel(BaseModel):
    """One structural constant c^g_mu of W_g"""
    partition: List[int]
    monomial: str
    value: str


class WFunctionModel(BaseModel):
    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={
            "example": {
                "g": 2,
                "W": [
                    {"coeff": "1/480", "exps": {"1": -1, "3": 1}},
                    {"coeff": "-11/5760", "exps": {"1": -2, "2": 2}},
                ],
                "formula": "theorem1",
            }
        },
    )

    g: int
    w: List[JetTermModel] = Field(alias="W")
    formula: Literal["theorem1", "equivalent"]
    coefficients: Optional[List[PartitionCoefficientModel]] = Field(
        default=None, description="Only with --by-partition"
    )


class BCoefficientModel(BaseModel):
    j: int = Field(description="B_{g,j} is the coefficient of (lambda-V)^(-j-1)")
    terms: List[JetTermModel]


class BCoefficientsModel(BaseModel):
    g: int
    coefficients: List[BCoefficientModel]


class MatrixModel(BaseModel):
    g: int
    kind: Literal["M", "Minv"]
    rows: List[List[List[JetTermModel]]] = Field(description="Row-major entries, each a term list")
