"""Exception hierarchy shared by every layer of the package."""


class MatDivError(Exception):
    """Base class for all errors raised by matdiv."""


class PreconditionError(MatDivError, ValueError):
    """An operation was called outside of its documented domain."""


class NotDivisibleError(MatDivError, ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


class DomainMismatchError(PreconditionError):
    """Operands belong to different rings."""


class SingularMatrixError(PreconditionError):
    pass


class NotUnimodularError(PreconditionError):
    pass


class NotCoprimeError(PreconditionError):
    pass


class FactorizationLimitError(PreconditionError):
    """Input is too large for the trial-division factorizers."""


class OracleBoundError(PreconditionError):
    """A determinant exceeds the brute-force enumeration bound."""


class CertificateError(MatDivError, AssertionError):
    """A computed certificate failed its own verification.

    This signals a bug, never bad input.
    """
