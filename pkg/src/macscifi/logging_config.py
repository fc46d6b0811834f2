"""Structured logging configuration for macscifi.

Logs go to stderr so that expansions printed on stdout stay machine-readable.
Events are snake_case names with keyword context, rendered as JSON for reports
and CI or through the console renderer for interactive runs.
"""

from __future__ import annotations

import logging
import os
import sys
from typing import Any

import structlog


def configure_logging(level: str | None = None, json: bool = False) -> None:
    """Configure structured logging for the library and the CLI.

    Sets up:
    - stderr output
    - ISO timestamp format
    - Log level filtering (argument, else LOG_LEVEL env var, else WARNING)
    - Exception formatting
    - JSON or console rendering

    Call this once per process, before the first log call.
    """
    log_level = (level or os.environ.get("LOG_LEVEL", "WARNING")).upper()

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, log_level, logging.WARNING),
        force=True,
    )

    renderer: Any = (
        structlog.processors.JSONRenderer() if json else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.format_exc_info,
            renderer,
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )


def get_logger(name: str | None = None) -> Any:
    """Get a structured logger instance.

    Args:
        name: Logger name (typically __name__ from calling module)

    Returns:
        Structured logger bound to the configured processors

    Example:
        logger = get_logger(__name__)
        logger.info("hhl_expansion_built", mu=[2, 1], terms=4)
    """
    return structlog.get_logger(name)
