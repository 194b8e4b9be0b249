import logging
import sys
from pathlib import Path
from typing import Optional

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
DATE_FORMAT = "%H:%M:%S"


def setup_logger(
    name: str = "sl2",
    log_level: str = "WARNING",
    log_file: Optional[str] = None
) -> logging.Logger:
    """
    Configure the command logger.

    Records go to stderr, leaving stdout to the reports. With `log_file` they
    are also appended to that file, whose directory is created on demand.
    """
    level = getattr(logging, log_level.upper())
    logger = logging.getLogger(name)
    logger.setLevel(level)
    logger.handlers.clear()

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    stderr_handler = logging.StreamHandler(sys.stderr)
    stderr_handler.set_name(f"{name}.stderr")
    stderr_handler.setLevel(level)
    stderr_handler.setFormatter(formatter)
    logger.addHandler(stderr_handler)

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        run_log = logging.FileHandler(log_file)
        run_log.set_name(f"{name}.file")
        run_log.setLevel(level)
        run_log.setFormatter(formatter)
        logger.addHandler(run_log)

    return logger
