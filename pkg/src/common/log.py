"""
Shared logger setup: one RichHandler on stderr so stdout stays clean for JSON.
"""
from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

from src.common.config import settings

_ROOT = "gradinv"
_configured = False


def _configure() -> None:
    global _configured
    if _configured:
        return
    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=True,
    )
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root = logging.getLogger(_ROOT)
    root.addHandler(handler)
    root.setLevel(settings.LOG_LEVEL.upper())
    root.propagate = False
    _configured = True


def get_logger(name: str) -> logging.Logger:
    """Return a child of the package logger, e.g. get_logger(__name__)."""
    _configure()
    short = name.removeprefix("src.")
    return logging.getLogger(f"{_ROOT}.{short}")
