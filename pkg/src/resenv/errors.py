"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ResenvError(Exception):
    """Base class for all errors raised by resenv."""


class ParseError(ResenvError, ValueError):
    """Malformed scalar, element or algebra-spec text."""


class FieldMismatchError(ResenvError, TypeError):
    """Operands live over different coefficient fields or algebras."""


class StructureError(ResenvError, ValueError):
    """Structurally malformed structure-constant or p-map tables.

    Distinct from an axiom failure, which is reported by ``validate``.
    """


class InvalidRestrictedStructure(ResenvError):
    """The associative p-th power of a Lie element left degree 1."""


class ClosureError(ResenvError, ValueError):
    """A subspace fails a claimed closure (bracket, p-map, ideal)."""

    def __init__(self, message: str, violated: str):
        super().__init__(message)
        self.violated = violated


class UnsupportedClass(ResenvError):
    """Typed refusal: the input lies outside the supported algebra classes."""


class NotInvertibleError(ResenvError, ArithmeticError):
    """The linear system u*v = 1 has no solution."""


class NotLiftableError(ResenvError, ValueError):
    """e^2 - e does not lie in the supplied nil ideal."""


class IntegrityError(ResenvError, AssertionError):
    """An internal consistency assertion forced by the theory failed."""


class SizeGuardError(ResenvError):
    """The requested computation exceeds the desk-scale size contract."""


class DegreeBudgetExceeded(ResenvError):
    """Estimated polynomial degree exceeds the configured budget."""

    def __init__(self, estimate: int, budget: int):
        super().__init__(
            f"estimated numerator degree {estimate} exceeds budget {budget} "
            "(set RESENV_DEGREE_BUDGET to override)"
        )
        self.estimate = estimate
        self.budget = budget


class UsageError(ResenvError, ValueError):
    """Scenario parameters outside the supported range."""


class PreconditionError(ResenvError, ValueError):
    """A scenario input violates its stated precondition."""
