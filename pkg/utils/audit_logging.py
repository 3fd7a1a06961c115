import os
import logging
from logging.handlers import RotatingFileHandler
from typing import Optional


def initialize_audit_logger(log_directory: Optional[str] = None, level: str = "WARNING"):
    audit_logger = logging.getLogger("audit")
    audit_logger.setLevel(level)
    audit_logger.propagate = False

    if audit_logger.handlers:
        return audit_logger

    if log_directory:
        os.makedirs(log_directory, exist_ok=True)
        audit_handler = RotatingFileHandler(
            os.path.join(log_directory, "audit.log"),
            maxBytes=10485760,  # 10MB
            backupCount=10
        )
    else:
        audit_handler = logging.StreamHandler()
    audit_handler.setFormatter(logging.Formatter(
        '%(asctime)s - %(message)s'
    ))
    audit_logger.addHandler(audit_handler)
    return audit_logger
