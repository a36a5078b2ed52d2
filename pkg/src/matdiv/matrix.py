"""2x2 matrices over a PID and their Smith normal form with certificates.

Convention: ``snf(A)`` returns ``P, (a1, a2), Q`` with ``P @ A @ Q == diag(a1, a2)``,
equivalently ``A == P^-1 diag(a1, a2) Q^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CertificateError,
    DomainMismatchError,
    NotCoprimeError,
    NotUnimodularError,
    SingularMatrixError,
)
from .ring import Ring


@dataclass(frozen=True)
class Mat2:
    ring: Ring
    rows: tuple

    def __post_init__(self):
        (a, b), (c, d) = self.rows
        co = self.ring.coerce
        object.__setattr__(self, "rows", ((co(a), co(b)), (co(c), co(d))))

    @classmethod
    def of(cls, ring: Ring, rows) -> Mat2:
        return cls(ring, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, ring: Ring) -> Mat2:
        return cls(ring, ((1, 0), (0, 1)))

    @classmethod
    def diag(cls, ring: Ring, a, b) -> Mat2:
        return cls(ring, ((a, 0), (0, b)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        if other.ring != self.ring:
            raise DomainMismatchError(f"{self.ring!r} @ {other.ring!r}")
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return Mat2(self.ring, ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def det(self):
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def adjugate(self) -> Mat2:
        (a, b), (c, d) = self.rows
        return Mat2(self.ring, ((d, -b), (-c, a)))

    def transpose(self) -> Mat2:
        (a, b), (c, d) = self.rows
        return Mat2(self.ring, ((a, c), (b, d)))

    def scale(self, k) -> Mat2:
        return Mat2(self.ring, tuple(tuple(k * x for x in r) for r in self.rows))

    def is_unimodular(self) -> bool:
        return self.ring.is_unit(self.det())

    def is_singular(self) -> bool:
        return not self.det()

    def is_diagonal(self) -> bool:
        return not self.rows[0][1] and not self.rows[1][0]

    def tolist(self) -> list:
        return [list(r) for r in self.rows]

    def entries(self) -> tuple:
        return self.rows[0] + self.rows[1]

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + "  ".join(c.rjust(w) for c in r) + "]" for r in cells)


def mul(X: Mat2, Y: Mat2) -> Mat2:
    return X @ Y


def det(X: Mat2):
    return X.det()


def inverse_unimodular(X: Mat2) -> Mat2:
    R = X.ring
    d = X.det()
    if not R.is_unit(d):
        raise NotUnimodularError(f"determinant {d} is not a unit")
    return X.adjugate().scale(R.unit_inverse(d))


def exact_left_quotient(B: Mat2, A: Mat2) -> Mat2 | None:
    """``B^-1 A`` when it is integral, else None. B must be nonsingular."""
    R = B.ring
    d = B.det()
    if not d:
        raise SingularMatrixError("left factor is singular")
    num = B.adjugate() @ A
    if not all(R.divides(d, x) for x in num.entries()):
        return None
    return Mat2(R, tuple(tuple(R.exact_div(x, d) for x in r) for r in num.rows))


@dataclass(frozen=True)
class SmithDecomposition:
    """Certificate ``P @ source @ Q == diag(alpha1, alpha2)``."""

    source: Mat2
    P: Mat2
    alpha1: object
    alpha2: object
    Q: Mat2

    @property
    def ring(self) -> Ring:
        return self.source.ring

    @property
    def alphas(self) -> tuple:
        return self.alpha1, self.alpha2

    @property
    def diag(self) -> Mat2:
        return Mat2.diag(self.ring, self.alpha1, self.alpha2)

    def check(self) -> bool:
        R = self.ring
        return (
            self.P.is_unimodular()
            and self.Q.is_unimodular()
            and self.P @ self.source @ self.Q == self.diag
            and R.divides(self.alpha1, self.alpha2)
            and R.canonical(self.alpha1)[1] == self.alpha1
            and R.canonical(self.alpha2)[1] == self.alpha2
        )


def _row_bezout(R: Ring, a, c) -> Mat2:
    # unimodular E with E @ (a, c)^T == (gcd, 0)^T
    g, x, y = R.egcd(a, c)
    return Mat2(R, ((x, y), (-R.exact_div(c, g), R.exact_div(a, g))))


def snf(A: Mat2) -> SmithDecomposition:
    R = A.ring
    if A.is_singular():
        raise SingularMatrixError("Smith normal form requested for a singular matrix")
    P = Mat2.identity(R)
    Q = Mat2.identity(R)
    M = A
    while True:
        if M[1, 0]:
            E = _row_bezout(R, M[0, 0], M[1, 0])
            M, P = E @ M, E @ P
        if M[0, 1]:
            E = _row_bezout(R, M[0, 0], M[0, 1]).transpose()
            M, Q = M @ E, Q @ E
            continue
        if R.divides(M[0, 0], M[1, 1]):
            break
        # fold row 2 into row 1 so the next pass produces gcd(a11, a22)
        E = Mat2(R, ((1, 1), (0, 1)))
        M, P = E @ M, E @ P
    u1, a1 = R.canonical(M[0, 0])
    u2, a2 = R.canonical(M[1, 1])
    U = Mat2.diag(R, R.unit_inverse(u1), R.unit_inverse(u2))
    P = U @ P
    dec = SmithDecomposition(A, P, a1, a2, Q)
    if P @ A @ Q != dec.diag:
        raise CertificateError("snf certificate failed")
    return dec


def unimodular_complete_row(u, v, ring: Ring) -> Mat2:
    """Determinant-1 matrix whose second row is ``(u, v)``.

    The first row ``(x, y)`` satisfies ``x*v - y*u == 1`` with ``x`` reduced
    modulo ``u`` (least nonnegative for integers, least degree for polynomials).
    """
    R = ring
    u, v = R.coerce(u), R.coerce(v)
    if not u and not v:
        raise NotCoprimeError("(0, 0) cannot be completed")
    g, s, _ = R.egcd(v, u)
    if not R.is_unit(g):
        raise NotCoprimeError(f"gcd({u}, {v}) = {g} is not a unit")
    if not u:
        x = R.unit_inverse(v)
        return Mat2(R, ((x, 0), (u, v)))
    x = s * R.unit_inverse(g)
    x = x % abs(u) if isinstance(x, int) else x % u
    y = R.exact_div(x * v - 1, u)
    return Mat2(R, ((x, y), (u, v)))
