from datetime import datetime
from typing import Callable
import uuid
import json
import logging

from models import CommandModel
from utils.exceptions import HodgeException

# Get the audit logger
audit_logger = logging.getLogger("audit")

class AuditMiddleware:
    """
    Wraps a command handler and writes one JSON audit record per invocation,
    including invocations that end in an error.
    """

    def __init__(self, handler: Callable[[CommandModel], int]):
        self.handler = handler

    def __call__(self, command: CommandModel) -> int:
        start_time = datetime.now()
        exit_code = 2
        error = None
        try:
            exit_code = self.handler(command)
            return exit_code
        except HodgeException as e:
            exit_code, error = e.exit_code, e.detail
            raise
        finally:
            log_entry = {
                "id": str(uuid.uuid4()),
                "command": command.subcommand,
                "options": command.options,
                "output_format": command.output_format,
                "status": "success" if exit_code == 0 else "failure",
                "exit_code": exit_code,
                "error": error,
                "duration_ms": (datetime.now() - start_time).total_seconds() * 1000,
                "timestamp": datetime.now(),
            }
            audit_logger.info(json.dumps(log_entry, sort_keys=True, default=str))
