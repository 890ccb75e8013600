"""Logging setup for the command-line front end."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def configure_logging(level: str = "WARNING") -> None:
    """Route the package loggers to stderr through rich.

    Results are written to stdout or a file, so logging must never share that stream.
    """
    name = level.upper()
    if name not in LOG_LEVELS:
        raise ValueError(f"Unknown log level: {level}. Use one of {', '.join(LOG_LEVELS)}.")

    handler = RichHandler(
        console=Console(stderr=True),
        show_time=False,
        show_path=False,
        rich_tracebacks=False,
    )
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))

    root = logging.getLogger("vcausal")
    root.handlers.clear()
    root.addHandler(handler)
    root.setLevel(name)
    root.propagate = False
