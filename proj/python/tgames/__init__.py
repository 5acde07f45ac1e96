"""Solvers for two-player games on temporal graphs."""

from ._core import (
    BudgetExceeded,
    Error,
    ParseError,
    canonical,
    generate,
    oracle_region,
    profiles,
    run,
    solve,
    validate,
    verify_certificate,
)

__all__ = [
    "BudgetExceeded",
    "Error",
    "ParseError",
    "canonical",
    "generate",
    "oracle_region",
    "profiles",
    "run",
    "solve",
    "validate",
    "verify_certificate",
]
