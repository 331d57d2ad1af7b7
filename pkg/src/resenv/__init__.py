"""Exact computations with restricted Lie algebras and their restricted enveloping algebras."""

from __future__ import annotations

from .envalg import EnvAlgebra, EnvElement, TensorElement
from .errors import ResenvError
from .liealg import LieElement, RestrictedLieAlgebra, validate
from .scalars import Field

__version__ = "0.1.0"

__all__ = [
    "EnvAlgebra",
    "EnvElement",
    "Field",
    "LieElement",
    "ResenvError",
    "RestrictedLieAlgebra",
    "TensorElement",
    "validate",
]
