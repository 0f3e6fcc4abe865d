"""Logging configuration using loguru."""

import sys
from pathlib import Path
from typing import Any, Dict

from loguru import logger

from .settings import Settings


def setup_logging(settings: Settings) -> None:
    """
    Configure loguru logger with appropriate settings.

    Diagnostics always go to stderr so that tables written to stdout stay clean.

    Args:
        settings: Toolkit settings
    """
    # Remove default handler
    logger.remove()

    log_format = (
        "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
        "<level>{level: <8}</level> | "
        "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
        "<level>{message}</level>"
    )

    logger.add(
        sys.stderr,
        format=log_format,
        level=settings.log_level,
        colorize=True,
        backtrace=True,
        diagnose=False,
    )

    if settings.log_to_file:
        logs_dir = Path(settings.log_dir)
        logs_dir.mkdir(parents=True, exist_ok=True)

        logger.add(
            logs_dir / "spinphase_{time:YYYY-MM-DD}.log",
            format=log_format,
            level=settings.log_level,
            rotation="00:00",  # Rotate at midnight
            retention="7 days",
            compression="zip",
            backtrace=True,
            diagnose=False,
        )

        # Numerical failures are kept longer
        logger.add(
            logs_dir / "errors_{time:YYYY-MM-DD}.log",
            format=log_format,
            level="ERROR",
            rotation="00:00",
            retention="30 days",
            compression="zip",
            backtrace=True,
            diagnose=False,
        )

    logger.debug(f"Logging configured with level: {settings.log_level}")


def log_run_start(command: str, config: Dict[str, Any]) -> None:
    """
    Log the start of a subcommand with its effective configuration.

    Args:
        command: Subcommand name
        config: Echo of the validated run configuration
    """
    logger.info(f"Run started: {command}")
    logger.debug(f"Run config: {config}")


def log_run_finished(command: str, exit_code: int, elapsed: float) -> None:
    level = "INFO" if exit_code == 0 else "WARNING"
    logger.log(level, f"Run finished: {command} exit={exit_code} ({elapsed:.2f}s)")


def log_error(error: Exception, context: Dict[str, Any] | None = None) -> None:
    """
    Log error with context.

    Diagnostic attributes carried by the exception (residuals, overlaps, gaps)
    are merged into the logged context.

    Args:
        error: Exception to log
        context: Additional context information
    """
    details = {k: v for k, v in getattr(error, "__dict__", {}).items() if not k.startswith("_")}
    merged = {**(context or {}), **details}
    logger.error(f"{type(error).__name__}: {error}")
    if merged:
        logger.error(f"Context: {merged}")
