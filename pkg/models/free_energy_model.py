from typing import List
from pydantic import BaseModel, ConfigDict

from algebra.truncated_series import TruncatedSeries
from models.curve_target_model import CurveTargetModel


class FreeEnergySlice(BaseModel):
    """Degree-zero genus-g free energy of a curve target, even sector, P/Q times"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    g: int
    target: CurveTargetModel
    series: TruncatedSeries

    def to_output(self) -> "FreeEnergySliceModel":
        return FreeEnergySliceModel(
            g=self.g,
            h=self.target.h,
            order=self.series.precision,
            terms=[SeriesTermModel(**term) for term in self.series.to_terms()],
        )


class SeriesTermModel(BaseModel):
    monomial: str
    value: str


class FreeEnergySliceModel(BaseModel):
    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "g": 2,
                "h": 0,
                "order": 6,
                "terms": [{"monomial": "Q2", "value": "7/5760"}],
            }
        }
    )

    g: int
    h: int
    order: int
    terms: List[SeriesTermModel]
