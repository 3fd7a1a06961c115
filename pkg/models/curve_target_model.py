from pydantic import BaseModel, ConfigDict, Field


class CurveTargetModel(BaseModel):
    """
    Smooth projective curve of genus h, restricted to its even cohomology
    {1, [pt]}: <1,[pt]> = 1, <1,1> = <[pt],[pt]> = 0, c_1 = (2-2h)[pt].
    """
    model_config = ConfigDict(frozen=True, json_schema_extra={"example": {"h": 1}})

    h: int = Field(ge=0, description="Genus of the target curve")

    @property
    def euler_characteristic(self) -> int:
        """<c_1(X), 1> = 2 - 2h"""
        return 2 - 2 * self.h
