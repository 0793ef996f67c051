"""
Logging setup for the EPR quantum games engine.

Results are printed on stdout, so every console record goes to stderr.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

from ..config.settings import config

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s"

# clifford compiles through numba and logs every jit at DEBUG
_QUIET_LOGGERS = ("numba", "hypothesis")


def _handler(handler: logging.Handler, level: int) -> logging.Handler:
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler.setLevel(level)
    return handler


def setup_logging(log_level: Optional[str] = None, log_file: Optional[str] = None, verbose: bool = False) -> None:
    """
    Configure the root logger.

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL; defaults to LOG_LEVEL
        log_file: Optional file that receives the same records
        verbose: Force DEBUG regardless of log_level
    """
    level = logging.DEBUG if verbose else getattr(logging, (log_level or config.log_level).upper())

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    root_logger.handlers.clear()
    root_logger.addHandler(_handler(logging.StreamHandler(sys.stderr), level))

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        root_logger.addHandler(_handler(logging.FileHandler(log_file), level))

    for name in _QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


setup_logging()
