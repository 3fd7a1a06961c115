import logging

from repository.implementation.memory.jet_repository import InMemoryJetRepository
from repository.implementation.memory.series_repository import InMemorySeriesRepository
from repository.interfaces.domains.jet_repository_interface import IJetRepository
from repository.interfaces.domains.series_repository_interface import ISeriesRepository
from repository.interfaces.repository_interface import IRepository


class InMemoryRepository(IRepository):
    """Process-local implementation of the main repository interface"""

    def __init__(self):
        self.app_logger = logging.getLogger("app")

        # Create repositories with shared resources
        self.jet_repository = InMemoryJetRepository(self.app_logger)
        self.series_repository = InMemorySeriesRepository(self.app_logger)

    def clear(self) -> None:
        self.jet_repository.clear()
        self.series_repository.clear()
        self.app_logger.info("Result store cleared")

    @property
    def jets(self) -> IJetRepository:
        """Get the jet-result repository"""
        return self.jet_repository

    @property
    def series(self) -> ISeriesRepository:
        """Get the truncated-series repository"""
        return self.series_repository
