from .app_logging import initialize_app_logger
from .audit_logging import initialize_audit_logger
from .exceptions import (
    HodgeException,
    DomainException,
    TruncationException,
    PoleException,
    SeriesLogException,
)
from .formatting import format_rational, format_indices

__all__ = [
    "initialize_app_logger",
    "initialize_audit_logger",
    "HodgeException",
    "DomainException",
    "TruncationException",
    "PoleException",
    "SeriesLogException",
    "format_rational",
    "format_indices",
]
