import logging
from typing import Callable, Dict, Type

import typer

from app.exceptions.custom_exceptions import (
    AlgebraException,
    CapExceededException,
    GateViolationException,
    OverflowCapException,
    ValidationException,
)

logger = logging.getLogger(__name__)

Handler = Callable[[AlgebraException], int]


class RegisterExceptionsMiddleware:
    """Maps domain exceptions onto CLI exit codes."""

    def __init__(self):
        self.handlers: Dict[Type[AlgebraException], Handler] = {}
        self.register_exception_handlers()

    def register_exception_handlers(self):
        """Register all exception handlers, most specific first"""
        self.add_exception_handler(GateViolationException, self.gate_violation_handler)
        self.add_exception_handler(CapExceededException, self.cap_exceeded_handler)
        self.add_exception_handler(OverflowCapException, self.cap_exceeded_handler)
        self.add_exception_handler(ValidationException, self.validation_handler)

    def add_exception_handler(self, exc_class: Type[AlgebraException], handler: Handler):
        self.handlers[exc_class] = handler

    def handle(self, exc: AlgebraException) -> int:
        for exc_class, handler in self.handlers.items():
            if isinstance(exc, exc_class):
                return handler(exc)
        return self.fallback_handler(exc)

    def validation_handler(self, exc: AlgebraException) -> int:
        logger.warning(f"Validation failure: {exc.detail}")
        typer.echo(f"error: {exc.detail}", err=True)
        return exc.exit_code

    def gate_violation_handler(self, exc: AlgebraException) -> int:
        logger.warning(f"Gate violation: {exc.detail}")
        typer.echo(f"gate: {exc.detail}", err=True)
        return exc.exit_code

    def cap_exceeded_handler(self, exc: AlgebraException) -> int:
        logger.error(f"Cap exceeded: {exc.detail}")
        typer.echo(f"cap: {exc.detail}", err=True)
        return exc.exit_code

    def fallback_handler(self, exc: AlgebraException) -> int:
        logger.error(f"Unhandled algebra error: {exc.detail}")
        typer.echo(f"error: {exc.detail}", err=True)
        return exc.exit_code
