from abc import ABC, abstractmethod

from repository.interfaces.domains.jet_repository_interface import IJetRepository
from repository.interfaces.domains.series_repository_interface import ISeriesRepository


class IRepository(ABC):
    """
    Interface for the result store.
    Acts as a facade for the individual domain repositories.
    """

    @abstractmethod
    def clear(self) -> None:
        """Drop every stored result"""
        pass

    @property
    @abstractmethod
    def jets(self) -> IJetRepository:
        """Get the jet-result repository"""
        pass

    @property
    @abstractmethod
    def series(self) -> ISeriesRepository:
        """Get the truncated-series repository"""
        pass
