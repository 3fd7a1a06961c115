import pytest
import json
from unittest.mock import MagicMock, patch

from middleware.audit_middleware import AuditMiddleware
from models import CommandModel
from utils.exceptions import DomainException


pytestmark = [pytest.mark.unit, pytest.mark.middleware]


@pytest.fixture
def command():
    return CommandModel(subcommand="wg", output_format="json", options={"g": 2, "formula": "theorem1"})


def logged_entry(mock_logger):
    mock_logger.info.assert_called_once()
    return json.loads(mock_logger.info.call_args[0][0])


def test_audit_middleware_success(command):
    handler = MagicMock(return_value=0)
    middleware = AuditMiddleware(handler)

    with patch("middleware.audit_middleware.audit_logger") as mock_logger:
        assert middleware(command) == 0

    handler.assert_called_once_with(command)
    log_data = logged_entry(mock_logger)
    assert log_data["command"] == "wg"
    assert log_data["options"] == {"formula": "theorem1", "g": 2}
    assert log_data["output_format"] == "json"
    assert log_data["status"] == "success"
    assert log_data["exit_code"] == 0
    assert log_data["error"] is None
    assert log_data["duration_ms"] >= 0
    assert "id" in log_data and "timestamp" in log_data


def test_audit_middleware_nonzero_exit(command):
    middleware = AuditMiddleware(MagicMock(return_value=1))

    with patch("middleware.audit_middleware.audit_logger") as mock_logger:
        assert middleware(command) == 1

    log_data = logged_entry(mock_logger)
    assert log_data["status"] == "failure"
    assert log_data["exit_code"] == 1


def test_audit_middleware_domain_error(command):
    handler = MagicMock(side_effect=DomainException("genus must be >= 2, got 1"))
    middleware = AuditMiddleware(handler)

    with patch("middleware.audit_middleware.audit_logger") as mock_logger:
        with pytest.raises(DomainException):
            middleware(command)

    log_data = logged_entry(mock_logger)
    assert log_data["status"] == "failure"
    assert log_data["exit_code"] == 2
    assert log_data["error"] == "genus must be >= 2, got 1"


def test_audit_middleware_other_errors_propagate(command):
    middleware = AuditMiddleware(MagicMock(side_effect=KeyError("boom")))

    with patch("middleware.audit_middleware.audit_logger") as mock_logger:
        with pytest.raises(KeyError):
            middleware(command)

    log_data = logged_entry(mock_logger)
    assert log_data["status"] == "failure"
    assert log_data["error"] is None
