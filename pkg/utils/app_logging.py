import os
import logging
from logging.handlers import RotatingFileHandler
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def initialize_app_logger(log_directory: Optional[str] = None, level: str = "WARNING"):
    app_logger = logging.getLogger("app")
    app_logger.setLevel(level)
    app_logger.propagate = False

    if app_logger.handlers:
        return app_logger

    if log_directory:
        os.makedirs(log_directory, exist_ok=True)
        app_handler = RotatingFileHandler(
            os.path.join(log_directory, "app.log"),
            maxBytes=10485760,  # 10MB
            backupCount=5
        )
    else:
        # stdout is reserved for results
        app_handler = logging.StreamHandler()
    app_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    app_logger.addHandler(app_handler)
    return app_logger
