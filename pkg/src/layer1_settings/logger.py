"""Layer 1: Settings - Structured logging setup."""

import logging
import logging.handlers
from contextvars import ContextVar
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional
from uuid import uuid4

from pythonjsonlogger import jsonlogger

from .constants import LOG_FILE_BACKUP_COUNT, LOG_FILE_MAX_BYTES

# Context variable for the CLI invocation ID (thread-safe)
invocation_id_context: ContextVar[str] = ContextVar("invocation_id", default="")


class InvocationIdFilter(logging.Filter):
    """Add invocation_id to all log records."""

    def filter(self, record: logging.LogRecord) -> bool:
        invocation_id = invocation_id_context.get()
        if not invocation_id:
            invocation_id = "-"
        record.invocation_id = invocation_id
        return True


class JsonFormatter(jsonlogger.JsonFormatter):
    """Custom JSON formatter with timestamp."""

    def add_fields(self, log_record, record, message_dict):
        super().add_fields(log_record, record, message_dict)
        log_record["timestamp"] = datetime.now(timezone.utc).isoformat()
        log_record["level"] = record.levelname
        log_record["logger"] = record.name


def setup_logging(
    log_level: str = "WARNING",
    structured: bool = False,
    log_file: Optional[Path] = None,
) -> logging.Logger:
    """
    Initialize logging for a CLI invocation.

    Standard output carries results, so every handler writes to stderr or a file.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        structured: Emit JSON lines on stderr instead of the human format
        log_file: Optional rotating JSON log file

    Returns:
        The configured root logger
    """
    level = getattr(logging, log_level.upper(), logging.WARNING)
    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    invocation_filter = InvocationIdFilter()

    console_handler = logging.StreamHandler()
    console_handler.setLevel(level)
    if structured:
        console_handler.setFormatter(JsonFormatter())
    else:
        console_handler.setFormatter(logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - [%(invocation_id)s] - %(message)s"
        ))
    console_handler.addFilter(invocation_filter)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
    root_logger.addHandler(console_handler)

    if log_file is not None:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=LOG_FILE_MAX_BYTES,
            backupCount=LOG_FILE_BACKUP_COUNT,
        )
        file_handler.setLevel(level)
        file_handler.setFormatter(JsonFormatter())
        file_handler.addFilter(invocation_filter)
        root_logger.addHandler(file_handler)

    return root_logger


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance."""
    return logging.getLogger(name)


def set_invocation_id(invocation_id: Optional[str] = None) -> str:
    """Set the invocation ID for the current context (generated when omitted)."""
    value = invocation_id or uuid4().hex[:12]
    invocation_id_context.set(value)
    return value


def get_invocation_id() -> str:
    """Get current invocation ID."""
    return invocation_id_context.get()
