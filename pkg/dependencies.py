import os

from repository import create_memory_repository
from services.service_factory import (
    create_loop_zero_service,
    create_hodge_series_service,
    create_curve_service,
    create_verification_service
)

from utils import initialize_app_logger
from utils import initialize_audit_logger

HODGE_WORKERS = int(os.getenv("HODGE_WORKERS", "4"))
HODGE_LOG_DIRECTORY = os.getenv("HODGE_LOG_DIRECTORY") or None
HODGE_LOG_LEVEL = os.getenv("HODGE_LOG_LEVEL", "WARNING").upper()

initialize_app_logger(HODGE_LOG_DIRECTORY, HODGE_LOG_LEVEL)
initialize_audit_logger(HODGE_LOG_DIRECTORY, HODGE_LOG_LEVEL)

repository = create_memory_repository()

loop_zero_service = create_loop_zero_service(repository)
hodge_series_service = create_hodge_series_service(repository, loop_zero_service)
curve_service = create_curve_service(repository, loop_zero_service, hodge_series_service)
verification_service = create_verification_service(
    loop_zero_service, hodge_series_service, curve_service, HODGE_WORKERS
)
