"""Logging configuration for GroupRank."""

# Import built-in modules
import os
import sys
from pathlib import Path
from typing import Optional

# Import third-party modules
from loguru import logger
from platformdirs import user_log_dir

# Import local modules
from grouprank_mcp.config import APP_NAME


def log_dir() -> Path:
    """Return the directory log files are written to.

    ``GROUPRANK_LOG_DIR`` wins over the platform default.
    """
    override = os.environ.get("GROUPRANK_LOG_DIR")
    if override:
        return Path(override)
    return Path(user_log_dir(APP_NAME))


def setup_logging(console_level: Optional[str] = "INFO", log_to_file: bool = True) -> Optional[Path]:
    """Set up logging configuration.

    Configures loguru logger with appropriate format and log file location.

    Args:
        console_level: Level of the stderr handler, or None for no console output.
        log_to_file: Whether to add the rotating DEBUG file handler.

    Returns:
        Optional[Path]: The log file path, if a file handler was added.
    """
    # Configure logger
    logger.remove()  # Remove default handler

    # Add console handler
    if console_level is not None:
        logger.add(
            sys.stderr,
            level=console_level,
            format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
        )

    if not log_to_file:
        return None

    # Create log directory if it doesn't exist
    directory = log_dir()
    directory.mkdir(parents=True, exist_ok=True)
    log_file = directory / "grouprank_mcp.log"

    # Add file handler
    logger.add(
        log_file,
        level="DEBUG",
        format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}",
        rotation="10 MB",
        retention="1 week",
    )

    logger.debug(f"Log file: {log_file}")
    return log_file
