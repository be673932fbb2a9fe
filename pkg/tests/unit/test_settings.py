"""Tests for configuration, the error hierarchy and logging setup."""

import json
import logging

import pytest

from src.layer1_settings import (
    EXIT_DOMAIN_ERROR,
    EXIT_PARSE_ERROR,
    ArityError,
    DegenerateAxisError,
    ExpressionSyntaxError,
    GeometricCalculusError,
    InputValidationError,
    InvariantViolationError,
    NoBarycenterError,
    Settings,
    get_invocation_id,
    set_invocation_id,
    setup_logging,
)
from src.layer1_settings.logger import InvocationIdFilter, JsonFormatter


class TestSettings:
    """Test pydantic-settings configuration."""

    def test_defaults(self):
        s = Settings()
        assert s.algebra.default_dimension == 3
        assert s.algebra.max_dimension == 16
        assert s.cli.approx_digits is None
        assert s.observability.log_level == "WARNING"

    def test_nested_environment_override(self, monkeypatch):
        monkeypatch.setenv("GRASSMANN_ALGEBRA__DEFAULT_DIMENSION", "4")
        monkeypatch.setenv("GRASSMANN_CLI__APPROX_DIGITS", "6")
        s = Settings()
        assert s.algebra.default_dimension == 4
        assert s.cli.approx_digits == 6

    def test_out_of_range_dimension_rejected(self, monkeypatch):
        monkeypatch.setenv("GRASSMANN_ALGEBRA__DEFAULT_DIMENSION", "17")
        with pytest.raises(Exception):
            Settings()


class TestErrors:
    """Test exit codes and messages of the error tiers."""

    def test_parse_tier_exit_code(self):
        assert ExpressionSyntaxError("bad", 1, 3).exit_code == EXIT_PARSE_ERROR
        assert InputValidationError("coeff", "bad").exit_code == EXIT_PARSE_ERROR

    def test_domain_tiers_exit_code(self):
        for error in (
            ArityError("vol", 4, 3),
            NoBarycenterError(),
            DegenerateAxisError(),
            InvariantViolationError("x = x"),
        ):
            assert isinstance(error, GeometricCalculusError)
            assert error.exit_code == EXIT_DOMAIN_ERROR

    def test_syntax_error_carries_position(self):
        error = ExpressionSyntaxError("unexpected ')'", 2, 7)
        assert (error.line, error.column, error.reason) == (2, 7, "unexpected ')'")
        assert str(error).startswith("2:7")


class TestLogging:
    """Test invocation ids and the JSON formatter."""

    def test_invocation_id_roundtrip(self):
        assert set_invocation_id("abc123") == "abc123"
        assert get_invocation_id() == "abc123"

    def test_generated_invocation_id(self):
        generated = set_invocation_id()
        assert len(generated) == 12
        assert get_invocation_id() == generated

    def test_filter_injects_invocation_id(self):
        set_invocation_id("feedbeef")
        record = logging.LogRecord("grassmann", logging.INFO, __file__, 1, "hello", None, None)
        assert InvocationIdFilter().filter(record)
        assert record.invocation_id == "feedbeef"

    def test_json_formatter_fields(self):
        record = logging.LogRecord("grassmann", logging.WARNING, __file__, 1, "rejected", None, None)
        payload = json.loads(JsonFormatter().format(record))
        assert payload["level"] == "WARNING"
        assert payload["logger"] == "grassmann"
        assert payload["message"] == "rejected"
        assert "timestamp" in payload

    def test_setup_logging_with_file(self, tmp_path):
        log_file = tmp_path / "logs" / "run.jsonl"
        root = setup_logging(log_level="DEBUG", structured=True, log_file=log_file)
        assert root.level == logging.DEBUG
        assert len(root.handlers) == 2
        assert log_file.parent.exists()
        for handler in root.handlers[:]:
            root.removeHandler(handler)
            handler.close()
        root.setLevel(logging.WARNING)
