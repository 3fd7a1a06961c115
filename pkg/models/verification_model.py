from typing import List
from pydantic import BaseModel, Field


class CheckResultModel(BaseModel):
    suite: str
    name: str
    passed: bool
    detail: str = ""


class VerificationReportModel(BaseModel):
    gmax: int
    suites: List[str]
    results: List[CheckResultModel] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> List[CheckResultModel]:
        return [result for result in self.results if not result.passed]


class IdentityReportModel(BaseModel):
    """Outcome of checking one tautological identity across a Hodge table"""
    identity: str
    g: int
    class_tag: str
    checked: int
    violations: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations
