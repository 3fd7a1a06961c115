from .audit_middleware import AuditMiddleware

__all__ = [
    "AuditMiddleware"
]
