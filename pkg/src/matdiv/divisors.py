"""Left-divisor calculus for nonsingular 2x2 matrices.

Everything here is driven by Smith certificates ``P A Q = diag(a1, a2)`` and
the transfer matrix ``tau = P_B P_A^-1``: the left gcd's Smith form, left
coprimality, left divisibility and the parametrization of divisors with a
prescribed Smith form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificateError, PreconditionError, SingularMatrixError
from .matrix import Mat2, SmithDecomposition, exact_left_quotient, inverse_unimodular, snf


def as_decomposition(X) -> SmithDecomposition:
    """Accept a matrix or an existing certificate."""
    if isinstance(X, SmithDecomposition):
        return X
    if isinstance(X, Mat2):
        return snf(X)
    raise TypeError(f"expected Mat2 or SmithDecomposition, got {type(X).__name__}")


def _mat(X) -> Mat2:
    return X.source if isinstance(X, SmithDecomposition) else X


@dataclass(frozen=True)
class TransferMatrix:
    tau: Mat2

    @property
    def t21(self):
        return self.tau[1, 0]


@dataclass(frozen=True)
class LeftGcdResult:
    """A left gcd ``D`` with ``D @ cofactorA == A`` and ``D @ cofactorB == B``."""

    d1: object
    d2: object
    gcd_matrix: Mat2
    cofactorA: Mat2
    cofactorB: Mat2


def transfer(db, da) -> TransferMatrix:
    """``P_B @ P_A^-1`` for the two certificates."""
    db, da = as_decomposition(db), as_decomposition(da)
    return TransferMatrix(db.P @ inverse_unimodular(da.P))


def leftgcd_snf(da, db) -> tuple:
    """Smith diagonal of the left gcd of A and B, read off the certificates."""
    da, db = as_decomposition(da), as_decomposition(db)
    R = da.ring
    a1, a2 = da.alphas
    b1, b2 = db.alphas
    t21 = transfer(db, da).t21
    d1 = R.gcd(a1, b1)
    d2 = R.gcd_all(a2, b2, R.lcm(a1, b1) * t21)
    if not R.divides(d1, d2):
        raise CertificateError(f"left gcd diagonal ({d1}, {d2}) is not a divisor chain")
    return d1, d2


def left_coprime(da, db) -> bool:
    d1, d2 = leftgcd_snf(da, db)
    R = as_decomposition(da).ring
    return R.is_unit(d1) and R.is_unit(d2)


def left_divides_direct(B: Mat2, A: Mat2) -> Mat2 | None:
    """Quotient ``C`` with ``B @ C == A`` via ``adj(B) A / det(B)``."""
    return exact_left_quotient(B, A)


def left_divides_structural(db, da) -> bool:
    """Divisibility from certificates alone.

    ``B | A`` iff ``b1 | a1``, ``b2 | a2`` and the bottom-left entry of
    ``P_B P_A^-1`` is divisible by ``b2 / gcd(b2, a1)``.
    """
    db, da = as_decomposition(db), as_decomposition(da)
    R = da.ring
    (a1, a2), (b1, b2) = da.alphas, db.alphas
    if not (R.divides(b1, a1) and R.divides(b2, a2)):
        return False
    step = R.exact_div(b2, R.gcd(b2, a1))
    return R.divides(step, transfer(db, da).t21)


def left_divides(B, A) -> Mat2 | None:
    """Return ``C`` with ``B @ C == A``, or None when B is not a left divisor.

    Both the direct quotient and the certificate criterion are evaluated;
    disagreement raises :class:`CertificateError`.
    """
    db, da = as_decomposition(B), as_decomposition(A)
    C = left_divides_direct(db.source, da.source)
    if (C is not None) != left_divides_structural(db, da):
        raise CertificateError("direct and structural divisibility tests disagree")
    if C is not None and db.source @ C != da.source:
        raise CertificateError("left quotient failed verification")
    return C


def right_divides(B: Mat2, A: Mat2) -> Mat2 | None:
    """``C`` with ``C @ B == A`` (left theory applied to transposes)."""
    C = left_divides(B.transpose(), A.transpose())
    return None if C is None else C.transpose()


def divisor_from_params(da, beta1, beta2, L: Mat2) -> Mat2:
    """The left divisor ``(L P_A)^-1 diag(beta1, beta2)`` of A."""
    da = as_decomposition(da)
    R = da.ring
    beta1, beta2 = R.coerce(beta1), R.coerce(beta2)
    a1, a2 = da.alphas
    if not beta1 or not beta2:
        raise PreconditionError("beta1, beta2 must be nonzero")
    if not R.divides(beta1, beta2):
        raise PreconditionError(f"beta1={beta1} does not divide beta2={beta2}")
    if not R.divides(beta1, a1):
        raise PreconditionError(f"beta1={beta1} does not divide alpha1={a1}")
    if not R.divides(beta2, a2):
        raise PreconditionError(f"beta2={beta2} does not divide alpha2={a2}")
    if not L.is_unimodular():
        raise PreconditionError("L must be unimodular")
    step = R.exact_div(beta2, R.gcd(beta2, a1))
    if not R.divides(step, L[1, 0]):
        raise PreconditionError(f"bottom-left of L must be divisible by {step}")
    D = inverse_unimodular(L @ da.P) @ Mat2.diag(R, beta1, beta2)
    if left_divides(D, da.source) is None:
        raise CertificateError("constructed divisor does not divide A")
    dd = snf(D)
    if (dd.alpha1, dd.alpha2) != (R.canonical(beta1)[1], R.canonical(beta2)[1]):
        raise CertificateError("constructed divisor has the wrong Smith form")
    return D


def absorb_prime_divisor(A, B) -> Mat2 | None:
    """For prime ``det(B)``: ``C`` with ``A == B @ C`` unless A, B are left coprime."""
    da, db = as_decomposition(A), as_decomposition(B)
    R = db.ring
    d = db.source.det()
    if not d:
        raise SingularMatrixError("B is singular")
    if not R.is_prime(d):
        raise PreconditionError(f"det(B) = {d} is not prime")
    if left_coprime(da, db):
        return None
    C = left_divides(db, da)
    if C is None:
        raise CertificateError("prime-determinant divisor was not absorbed")
    return C
