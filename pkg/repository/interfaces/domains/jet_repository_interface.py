from abc import ABC, abstractmethod
from typing import Any, Callable, Optional


class IJetRepository(ABC):
    """Store for exact jet-algebra results keyed by (kind, genus)"""

    @abstractmethod
    def get_jet_result(self, kind: str, g: int) -> Optional[Any]:
        pass

    @abstractmethod
    def save_jet_result(self, kind: str, g: int, value: Any) -> Any:
        pass

    @abstractmethod
    def get_or_compute(self, kind: str, g: int, compute: Callable[[], Any]) -> Any:
        pass

    @abstractmethod
    def count(self) -> int:
        pass

    @abstractmethod
    def clear(self) -> None:
        pass
