"""
Unit tests for the command stack, exit-code mapping, settings and logging.
"""
import logging

import pytest
import typer
from prometheus_client import REGISTRY

from app.core.constants import EXIT_CAP, EXIT_GATE, EXIT_VALIDATION
from app.core.settings import Settings
from app.exceptions.classification_exceptions import GeneratorCountException, NoRelationException
from app.exceptions.custom_exceptions import (
    AlgebraException,
    CapExceededException,
    GateViolationException,
    OverflowCapException,
    SchemeFormatException,
)
from app.middleware.command_stack import CommandStack
from app.middleware.logging_middleware import LoggingMiddleware
from app.middleware.metrics_middleware import MetricsMiddleware
from app.middleware.register_exceptions import RegisterExceptionsMiddleware
from app.utils.logger import setup_logger


@pytest.mark.unit
class TestExceptionHandlers:
    """Test cases for RegisterExceptionsMiddleware."""

    @pytest.mark.parametrize(
        "exc, code",
        [
            (GateViolationException("E8", 5, 7), EXIT_GATE),
            (CapExceededException(10), EXIT_CAP),
            (OverflowCapException(100), EXIT_CAP),
            (SchemeFormatException("bad header"), EXIT_VALIDATION),
            (GeneratorCountException(2, 2), EXIT_VALIDATION),
            (NoRelationException(6, 2), EXIT_VALIDATION),
            (AlgebraException("unexpected"), EXIT_VALIDATION),
        ],
    )
    def test_exit_codes(self, exc, code):
        """Test each exception maps to its exit code."""
        assert RegisterExceptionsMiddleware().handle(exc) == code

    def test_message_on_stderr(self, capsys):
        """Test the handler reports the detail on stderr."""
        RegisterExceptionsMiddleware().handle(GateViolationException("D", 2, 3))
        captured = capsys.readouterr()
        assert "requires p >= 3" in captured.err
        assert captured.out == ""


@pytest.mark.unit
class TestCommandStack:
    """Test cases for CommandStack."""

    def test_passes_result(self):
        """Test a successful command returns its value."""
        stack = CommandStack(metrics_middleware=MetricsMiddleware(metrics_file=""))
        assert stack.run("classify", lambda: 5) == 5

    def test_maps_to_exit(self):
        """Test domain errors become typer exits."""
        stack = CommandStack(metrics_middleware=MetricsMiddleware(metrics_file=""))

        def failing():
            raise GateViolationException("E6", 3, 5)

        with pytest.raises(typer.Exit) as info:
            stack.run("classify", failing)
        assert info.value.exit_code == EXIT_GATE

    def test_other_errors_propagate(self):
        """Test non-domain errors are not swallowed."""
        stack = CommandStack(metrics_middleware=MetricsMiddleware(metrics_file=""))

        def failing():
            raise RuntimeError("boom")

        with pytest.raises(RuntimeError):
            stack.run("classify", failing)


@pytest.mark.unit
class TestMetricsMiddleware:
    """Test cases for MetricsMiddleware."""

    def test_counts_status(self):
        """Test ok and error runs are counted separately."""
        labels_ok = {"command": "metrics-check", "status": "ok"}
        labels_error = {"command": "metrics-check", "status": "error"}
        before_ok = REGISTRY.get_sample_value("cli_commands_total", labels_ok) or 0
        before_error = REGISTRY.get_sample_value("cli_commands_total", labels_error) or 0
        middleware = MetricsMiddleware(metrics_file="")
        middleware.dispatch("metrics-check", lambda: None)
        with pytest.raises(ValueError):
            middleware.dispatch("metrics-check", lambda: int("x"))
        assert REGISTRY.get_sample_value("cli_commands_total", labels_ok) == before_ok + 1
        assert REGISTRY.get_sample_value("cli_commands_total", labels_error) == before_error + 1

    def test_textfile(self, tmp_path):
        """Test metrics are written when a file is configured."""
        path = tmp_path / "metrics.prom"
        MetricsMiddleware(metrics_file=str(path)).dispatch("textfile-check", lambda: None)
        assert 'command="textfile-check"' in path.read_text()


@pytest.mark.unit
class TestLogging:
    """Test cases for LoggingMiddleware and setup_logger."""

    def test_logs_start_and_finish(self, caplog):
        """Test the middleware logs both ends of a command."""
        with caplog.at_level(logging.INFO, logger="app.middleware.logging_middleware"):
            LoggingMiddleware().dispatch("snf", lambda: None)
        assert "Command: snf started" in caplog.text
        assert "Command: snf finished" in caplog.text

    def test_reraises(self, caplog):
        """Test errors are logged and re-raised."""
        with caplog.at_level(logging.ERROR, logger="app.middleware.logging_middleware"):
            with pytest.raises(KeyError):
                LoggingMiddleware().dispatch("snf", lambda: {}["x"])
        assert "Error running snf" in caplog.text

    def test_file_handler(self, tmp_path):
        """Test a log file adds a second handler and creates its directory."""
        path = tmp_path / "logs" / "run.log"
        logger = setup_logger("app.tests.file", "DEBUG", str(path))
        assert [h.get_name() for h in logger.handlers] == ["app.tests.file.stderr", "app.tests.file.file"]
        assert path.parent.is_dir()
        logger.warning("closure cap reached")
        for handler in logger.handlers:
            handler.flush()
        assert "[WARNING] app.tests.file: closure cap reached" in path.read_text()
        for handler in logger.handlers:
            handler.close()


@pytest.mark.unit
class TestSettings:
    """Test cases for Settings."""

    def test_environment(self):
        """Test the pytest environment is applied."""
        settings = Settings()
        assert settings.CLOSURE_CAP == 10000
        assert settings.HILBERT_DMAX == 40

    def test_override(self, monkeypatch):
        """Test environment variables override defaults."""
        monkeypatch.setenv("CATALOG_FIELD_DEGREE_CAP", "4")
        monkeypatch.setenv("INT_MAGNITUDE_CAP", "1000")
        settings = Settings()
        assert settings.CATALOG_FIELD_DEGREE_CAP == 4
        assert settings.INT_MAGNITUDE_CAP == 1000
