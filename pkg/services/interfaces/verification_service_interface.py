from abc import ABC, abstractmethod
from typing import Sequence

from models import VerificationReportModel


class IVerificationService(ABC):
    """
    Interface for the verification suites.
    Each suite cross-checks one family of identities; suites run concurrently and
    their results are reported in request order.
    """

    @abstractmethod
    async def run(self, suites: Sequence[str], gmax: int = 4) -> VerificationReportModel:
        """
        Run the named suites

        Args:
            suites: suite names, or ["all"]
            gmax: largest genus probed

        Returns:
            Report with one result per checked invariant

        Raises:
            DomainException: If a suite name is unknown or gmax < 1
        """
        pass
