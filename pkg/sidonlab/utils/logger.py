"""Global Logging Configuration"""

import logging
import sys
from logging import FileHandler
from pathlib import Path
from typing import Optional, Union

from colorlog import ColoredFormatter

from sidonlab.config import config

CONSOLE_FORMAT = "%(log_color)s%(levelname)-8s%(reset)s %(blue)s%(name)s:%(reset)s %(message)s"
FILE_FORMAT = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"
LOG_COLORS = {
    "DEBUG": "cyan",
    "INFO": "green",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "red,bg_white",
}


def _console_handler(level: int) -> logging.Handler:
    # stdout carries command output only
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(ColoredFormatter(CONSOLE_FORMAT, log_colors=LOG_COLORS, reset=True, style="%"))
    return handler


def _file_handler(level: int, path: Path) -> logging.Handler:
    path.parent.mkdir(parents=True, exist_ok=True)
    handler = FileHandler(filename=str(path), encoding="utf-8")
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(FILE_FORMAT))
    return handler


def setuplog(
    name: str,
    level: Optional[int] = None,
    log_dir: Union[str, Path, None] = None,
    filename: Optional[str] = None,
) -> logging.Logger:
    """Colored stderr logger, plus a shared log file when LOG_TO_FILE is set"""

    level = config.LOG_LEVEL if level is None else level
    logger = logging.getLogger(name)
    logger.setLevel(level)
    logger.propagate = False

    file_handlers = [h for h in logger.handlers if isinstance(h, FileHandler)]
    if len(file_handlers) == len(logger.handlers):
        logger.addHandler(_console_handler(level))

    if config.LOG_TO_FILE and not file_handlers:
        directory = Path(log_dir) if log_dir is not None else config.LOG_DIR
        logger.addHandler(_file_handler(level, directory / (filename or config.LOG_FILENAME)))

    return logger
