import threading
from typing import Callable, Dict, Hashable, Optional, Tuple

from algebra.truncated_series import TruncatedSeries
from repository.interfaces.domains.series_repository_interface import ISeriesRepository


class InMemorySeriesRepository(ISeriesRepository):
    """Lock-protected dictionary of truncated series"""

    def __init__(self, logger=None):
        self.store: Dict[Tuple[str, Tuple[Hashable, ...]], TruncatedSeries] = {}
        self.lock = threading.RLock()
        self.logger = logger

    def get_series(self, name: str, params: Tuple[Hashable, ...]) -> Optional[TruncatedSeries]:
        with self.lock:
            return self.store.get((name, tuple(params)))

    def save_series(self, name: str, params: Tuple[Hashable, ...], series: TruncatedSeries) -> TruncatedSeries:
        with self.lock:
            return self.store.setdefault((name, tuple(params)), series)

    def get_or_compute(self, name: str, params: Tuple[Hashable, ...], compute: Callable[[], TruncatedSeries]) -> TruncatedSeries:
        cached = self.get_series(name, params)
        if cached is not None:
            if self.logger:
                self.logger.debug(f"series cache hit: {name} {params}")
            return cached
        return self.save_series(name, params, compute())

    def count(self) -> int:
        with self.lock:
            return len(self.store)

    def clear(self) -> None:
        with self.lock:
            self.store.clear()
