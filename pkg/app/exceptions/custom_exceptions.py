from app.middleware.metrics_middleware import CAP_EXCEEDED_TOTAL
from app.core.constants import (
    EXIT_VALIDATION,
    EXIT_GATE,
    EXIT_CAP,
    ERROR_CROSS_FIELD,
    ERROR_SINGULAR,
    ERROR_NOT_LINEARLY_REDUCTIVE,
)


class AlgebraException(Exception):
    """Base class for every domain error; carries the CLI exit code."""

    exit_code: int = EXIT_VALIDATION

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class ValidationException(AlgebraException):
    exit_code = EXIT_VALIDATION

    def __init__(self, detail: str = "Validation error"):
        super().__init__(detail)


class NotPrimeException(ValidationException):
    def __init__(self, p: int):
        super().__init__(f"{p} is not prime")


class FieldMismatchException(ValidationException):
    def __init__(self, detail: str = ERROR_CROSS_FIELD):
        super().__init__(detail)


class FieldTooSmallException(ValidationException):
    def __init__(self, r: int, p: int, k: int):
        super().__init__(f"F_{p}^{k} has no primitive {r}th root of unity; extend the field first")


class NotCoprimeException(ValidationException):
    def __init__(self, r: int, p: int):
        super().__init__(f"r={r} is not coprime to the characteristic {p}")


class SingularMatrixException(ValidationException):
    def __init__(self, detail: str = ERROR_SINGULAR):
        super().__init__(detail)


class NonSemisimpleException(ValidationException):
    def __init__(self, detail: str = "Group has an element of order divisible by p"):
        super().__init__(detail)


class NotAbelianException(ValidationException):
    def __init__(self, detail: str = "Group is not abelian"):
        super().__init__(detail)


class NotLinearlyReductiveException(ValidationException):
    def __init__(self, detail: str = ERROR_NOT_LINEARLY_REDUCTIVE):
        super().__init__(detail)


class SchemeFormatException(ValidationException):
    def __init__(self, detail: str = "Malformed scheme description"):
        super().__init__(detail)


class EmbeddingException(ValidationException):
    def __init__(self, detail: str):
        super().__init__(detail)


class OverflowCapException(AlgebraException):
    exit_code = EXIT_CAP

    def __init__(self, cap: int):
        super().__init__(f"Integer entry exceeded the magnitude cap {cap}")
        CAP_EXCEEDED_TOTAL.labels(kind="magnitude").inc()


class CapExceededException(AlgebraException):
    exit_code = EXIT_CAP

    def __init__(self, cap: int, what: str = "group"):
        super().__init__(f"{what} exceeded the cap of {cap} elements")
        CAP_EXCEEDED_TOTAL.labels(kind=what).inc()


class GateViolationException(AlgebraException):
    exit_code = EXIT_GATE

    def __init__(self, kind: str, p: int, minimum: int):
        super().__init__(f"type {kind} requires p >= {minimum}, got p = {p}")
