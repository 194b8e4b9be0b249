from app.exceptions.custom_exceptions import ValidationException


class NoRelationException(ValidationException):
    """Raised when the substitution kernel at the requested degree is not a line."""
    def __init__(self, degree: int, dimension: int):
        super().__init__(
            f"Kernel at weighted degree {degree} has dimension {dimension}, expected 1"
        )
        self.degree = degree
        self.dimension = dimension


class GeneratorCountException(ValidationException):
    """Raised when the invariant ring does not have exactly three generators up to dmax."""
    def __init__(self, count: int, dmax: int):
        super().__init__(f"Found {count} minimal generators up to degree {dmax}, expected 3")


class UnmatchedNormalFormException(ValidationException):
    """Raised when a relation cannot be carried onto any ADE template."""
    def __init__(self, relation: str):
        super().__init__(f"Relation {relation} matches no ADE normal form")


class ClassificationException(ValidationException):
    """Raised when a scheme or group fits none of the catalog cases."""
    def __init__(self, detail: str):
        super().__init__(detail)


class UnsupportedNormalizationException(ValidationException):
    """Raised when no conjugator is available for the scheme's type."""
    def __init__(self, detail: str):
        super().__init__(detail)
