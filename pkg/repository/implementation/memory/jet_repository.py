import threading
from typing import Any, Callable, Dict, Optional, Tuple

from repository.interfaces.domains.jet_repository_interface import IJetRepository


class InMemoryJetRepository(IJetRepository):
    """Lock-protected dictionary of jet results"""

    def __init__(self, logger=None):
        self.store: Dict[Tuple[str, int], Any] = {}
        self.lock = threading.RLock()
        self.logger = logger

    def get_jet_result(self, kind: str, g: int) -> Optional[Any]:
        with self.lock:
            return self.store.get((kind, g))

    def save_jet_result(self, kind: str, g: int, value: Any) -> Any:
        with self.lock:
            # first writer wins so every reader sees one value
            return self.store.setdefault((kind, g), value)

    def get_or_compute(self, kind: str, g: int, compute: Callable[[], Any]) -> Any:
        cached = self.get_jet_result(kind, g)
        if cached is not None:
            if self.logger:
                self.logger.debug(f"jet cache hit: {kind} g={g}")
            return cached
        return self.save_jet_result(kind, g, compute())

    def count(self) -> int:
        with self.lock:
            return len(self.store)

    def clear(self) -> None:
        with self.lock:
            self.store.clear()
