from repository.interfaces.repository_interface import IRepository
from repository.interfaces.domains.jet_repository_interface import IJetRepository
from repository.interfaces.domains.series_repository_interface import ISeriesRepository
from repository.repository_factory import create_memory_repository

__all__ = [
    "IRepository",
    "IJetRepository",
    "ISeriesRepository",
    "create_memory_repository",
]
