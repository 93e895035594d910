"""Exact arithmetic on a nonstandard model of arithmetic built from generalized power series."""

from ._core import (
    CannotProve,
    CoefficientNotRepresentable,
    Element,
    Error,
    InvariantViolation,
    NegativeResult,
    NonTerminatingQuotient,
    NotEquivalent,
    ParseError,
    PartialityError,
    PreconditionError,
    StandardInput,
    Underflow,
    ValidationFailure,
    apply,
    cli,
    decide,
    divmod,
    divmod_scalar,
    prove_e5,
    real_embed,
    root_floor,
    run_suite,
)

__all__ = [name for name in dir() if not name.startswith("_")]
