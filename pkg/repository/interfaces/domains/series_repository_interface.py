from abc import ABC, abstractmethod
from typing import Callable, Hashable, Optional, Tuple

from algebra.truncated_series import TruncatedSeries


class ISeriesRepository(ABC):
    """Store for truncated series keyed by a name and its build parameters"""

    @abstractmethod
    def get_series(self, name: str, params: Tuple[Hashable, ...]) -> Optional[TruncatedSeries]:
        pass

    @abstractmethod
    def save_series(self, name: str, params: Tuple[Hashable, ...], series: TruncatedSeries) -> TruncatedSeries:
        pass

    @abstractmethod
    def get_or_compute(self, name: str, params: Tuple[Hashable, ...], compute: Callable[[], TruncatedSeries]) -> TruncatedSeries:
        pass

    @abstractmethod
    def count(self) -> int:
        pass

    @abstractmethod
    def clear(self) -> None:
        pass
