import logging
import sys
from typing import Optional

from bilattice_programs.core.constants import LOG_LEVEL


def setup_logger(name: str = "bilattice_programs", level: Optional[int] = None) -> logging.Logger:
    """
    Sets up a logger with a standard configuration.

    Records go to stderr; stdout is reserved for reports.
    """
    if level is None:
        level = getattr(logging, LOG_LEVEL, logging.WARNING)

    logger = logging.getLogger(name)
    logger.setLevel(level)

    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(logging.DEBUG)
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    return logger


logger = setup_logger()
