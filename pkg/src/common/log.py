# src/common/log.py
import logging
import sys

from common import settings

PACKAGES = ("common", "holo", "domains", "catalog", "metrics", "schwarz", "stationarity", "cli")
FORMAT = "%(levelname)-7s %(name)s: %(message)s"


def level_for(verbosity):
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    return logging.getLevelName(settings.LOG_LEVEL.upper())


def configure_logging(verbosity=0, stream=None):
    """Attach one stderr handler to every koblab package logger."""
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(FORMAT))
    level = level_for(verbosity)
    if not isinstance(level, int):
        level = logging.WARNING
    for name in PACKAGES:
        logger = logging.getLogger(name)
        logger.handlers = [handler]
        logger.setLevel(level)
        logger.propagate = False
    return handler
