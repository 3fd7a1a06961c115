from typing import List, Optional
from pydantic import BaseModel


class StationaryConstantModel(BaseModel):
    """C^E_lambda(0) for one stationary insertion profile"""
    partition: List[int]
    g: Optional[int] = None
    value: str


class EisensteinComparisonModel(BaseModel):
    partition: List[int]
    eisenstein_value: str
    corollary_value: str
    agrees: bool


class TheoremAValueModel(BaseModel):
    """Closed evaluation of the one-point lambda_(g-1) integral with psi^(2g-1)"""
    g: int
    value: str
