"""Exception types raised across the package."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for every error raised by this package."""


class ParseError(AlgebraError):
    """Malformed scalar string or table document."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class NegativeRadicand(AlgebraError):
    """Square root of a negative number requested in Real mode."""


class UnsupportedTower(AlgebraError):
    """More than two independent square roots would be needed."""


class NonAssociative(AlgebraError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__(f"table is not associative: {len(self.violations)} violating triples, "
                         f"first {self.violations[:3]}")


class RealModeTableWithComplexEntries(AlgebraError):
    pass


class ModeMismatch(AlgebraError):
    pass


class DimensionMismatch(AlgebraError):
    pass


class SingularMatrix(AlgebraError):
    pass


class ProfileNotInCatalog(AlgebraError):
    """Invariants matched no catalog class; signals a bug or bad input."""


class InternalContradiction(AlgebraError):
    """A case the case analysis rules out was reached."""


class DegenerateForm(AlgebraError):
    pass


class BadPrime(AlgebraError):
    pass


class UnknownLabel(AlgebraError):
    pass


class MissingParameter(AlgebraError):
    """A family label was used without its parameter."""
