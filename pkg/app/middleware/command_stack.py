from typing import Callable, Optional, TypeVar

import typer

from app.exceptions.custom_exceptions import AlgebraException
from app.middleware.logging_middleware import LoggingMiddleware
from app.middleware.metrics_middleware import MetricsMiddleware
from app.middleware.register_exceptions import RegisterExceptionsMiddleware

T = TypeVar("T")


class CommandStack:
    """Runs a command through logging, metrics and exception handling, outermost first."""

    def __init__(
        self,
        logging_middleware: Optional[LoggingMiddleware] = None,
        metrics_middleware: Optional[MetricsMiddleware] = None,
        exception_middleware: Optional[RegisterExceptionsMiddleware] = None,
    ):
        self.logging_middleware = logging_middleware or LoggingMiddleware()
        self.metrics_middleware = metrics_middleware or MetricsMiddleware()
        self.exception_middleware = exception_middleware or RegisterExceptionsMiddleware()

    def run(self, command: str, call_next: Callable[[], T]) -> T:
        try:
            return self.logging_middleware.dispatch(
                command, lambda: self.metrics_middleware.dispatch(command, call_next)
            )
        except AlgebraException as exc:
            raise typer.Exit(code=self.exception_middleware.handle(exc))


command_stack = CommandStack()
