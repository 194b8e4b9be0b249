import logging
import time
from typing import Callable, TypeVar

T = TypeVar("T")


class LoggingMiddleware:
    def __init__(self, logger: logging.Logger | None = None):
        self.logger = logger or logging.getLogger(__name__)

    def dispatch(self, command: str, call_next: Callable[[], T]) -> T:
        start_time = time.time()
        self.logger.info(f"Command: {command} started")

        try:
            result = call_next()
            process_time = time.time() - start_time
            self.logger.info(f"Command: {command} finished in {process_time:.4f}s")
            return result

        except Exception as e:
            process_time = time.time() - start_time
            self.logger.error(
                f"Error running {command}: {str(e)} after {process_time:.4f}s"
            )
            raise
