"""Brute-force ground truth built on column lattices.

A nonsingular ``B`` left-divides ``A`` exactly when the column lattice of
``A`` sits inside that of ``B``. Left divisors of ``B`` up to right
associates are therefore the overlattices of ``B Z^2``, each represented by
its column Hermite form ``[[h11, 0], [h21, h22]]``. Nothing here uses Smith
certificates.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .divisors import LeftGcdResult
from .errors import CertificateError, OracleBoundError, PreconditionError
from .matrix import Mat2, exact_left_quotient
from .ring import ZZ, Ring

DEFAULT_BOUND = 10_000
BOUND_ENV = "MATDIV_ORACLE_BOUND"


def oracle_bound(bound: int | None = None) -> int:
    if bound is not None:
        return bound
    raw = os.environ.get(BOUND_ENV)
    return int(raw) if raw else DEFAULT_BOUND


@dataclass(frozen=True)
class HnfMatrix:
    """Lower-triangular column Hermite form; ``h21`` reduced modulo ``h22``."""

    h11: object
    h21: object
    h22: object
    ring: Ring = ZZ

    def as_mat(self) -> Mat2:
        return Mat2(self.ring, ((self.h11, 0), (self.h21, self.h22)))

    @property
    def det(self):
        return self.h11 * self.h22

    def is_unimodular(self) -> bool:
        return self.ring.is_unit(self.det)

    def snf_diagonal(self) -> tuple:
        R = self.ring
        d1 = R.gcd_all(self.h11, self.h21, self.h22)
        return d1, R.canonical(R.exact_div(self.det, d1))[1]

    def contains(self, vec) -> bool:
        """Is the column vector in this lattice?"""
        R = self.ring
        x, y = vec
        if not R.divides(self.h11, x):
            return False
        return R.divides(self.h22, y - self.h21 * R.exact_div(x, self.h11))


def _reduce_nonneg(R: Ring, a, m):
    return a % abs(m) if isinstance(a, int) else a % m


def col_hnf(columns, ring: Ring = ZZ) -> HnfMatrix:
    R = ring
    pivot = None
    tails = []
    for col in columns:
        x, y = (R.coerce(c) for c in col)
        if pivot is None:
            pivot = (x, y)
            continue
        a, b = pivot[0], x
        if not b:
            tails.append(y)
            continue
        if not a:
            tails.append(pivot[1])
            pivot = (x, y)
            continue
        g, s, t = R.egcd(a, b)
        ag, bg = R.exact_div(a, g), R.exact_div(b, g)
        tails.append(ag * y - bg * pivot[1])
        pivot = (g, s * pivot[1] + t * y)
    if pivot is None or not pivot[0] or not any(tails):
        raise PreconditionError("columns do not span a full-rank lattice")
    h22 = R.gcd_all(*tails)
    u, h11 = R.canonical(pivot[0])
    h21 = _reduce_nonneg(R, pivot[1] * R.unit_inverse(u), h22)
    return HnfMatrix(h11, h21, h22, R)


def columns(M: Mat2) -> list:
    return [(M[0, 0], M[1, 0]), (M[0, 1], M[1, 1])]


def leftgcd_oracle(A: Mat2, B: Mat2) -> HnfMatrix:
    """Hermite form of the lattice spanned by the columns of ``[A | B]``."""
    if A.ring != B.ring:
        raise PreconditionError("matrices over different rings")
    return col_hnf(columns(A) + columns(B), A.ring)


def leftgcd_result(A: Mat2, B: Mat2) -> LeftGcdResult:
    H = leftgcd_oracle(A, B)
    D = H.as_mat()
    cA, cB = exact_left_quotient(D, A), exact_left_quotient(D, B)
    if cA is None or cB is None:
        raise CertificateError("left gcd does not divide its arguments")
    d1, d2 = H.snf_diagonal()
    return LeftGcdResult(d1, d2, D, cA, cB)


def _divisors(n: int) -> list:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _prime_divisors(n: int) -> list:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _check_int(M: Mat2, bound: int) -> int:
    if M.ring != ZZ:
        raise PreconditionError("the enumeration oracle works over the integers only")
    d = abs(M.det())
    if not d:
        raise PreconditionError("singular matrix")
    if d > bound:
        raise OracleBoundError(f"|det| = {d} exceeds the oracle bound {bound}")
    return d


def enumerate_left_divisors(
    B: Mat2, include_units: bool = True, bound: int | None = None, prime_only: bool = False
) -> list:
    """All left divisors of ``B`` up to right associates, as sorted Hermite forms.

    With ``prime_only`` only divisors of prime determinant are produced.
    """
    n = _check_int(B, oracle_bound(bound))
    cols = columns(B)
    row_gcd = math.gcd(B[0, 0], B[0, 1])
    if prime_only:
        dets = _prime_divisors(n)
    else:
        dets = _divisors(n) if include_units else _divisors(n)[1:]
    out = []
    for d in dets:
        for d1 in _divisors(d):
            if row_gcd % d1:
                continue
            d2 = d // d1
            for h in range(d2):
                H = HnfMatrix(d1, h, d2)
                if all(H.contains(c) for c in cols):
                    out.append(H)
    return out


def _witnessed_divisors(M: Mat2, bound: int, exhaustive: bool) -> list:
    # Left coprimality with A passes to left divisors, and every nonunit has
    # a prime-determinant left divisor, so prime divisors decide both quantifiers.
    if exhaustive:
        return enumerate_left_divisors(M, include_units=False, bound=bound)
    return enumerate_left_divisors(M, bound=bound, prime_only=True)


def theorem2_oracle(A: Mat2, S: Mat2, bound: int | None = None, exhaustive: bool = True) -> bool:
    """True iff no nonunit left divisor of ``S`` is left coprime with ``A``."""
    bound = oracle_bound(bound)
    for D in _witnessed_divisors(S, bound, exhaustive):
        if leftgcd_oracle(D.as_mat(), A).is_unimodular():
            return False
    return True


def definition_check(
    B: Mat2,
    S: Mat2,
    T: Mat2,
    A: Mat2,
    permissive: bool = False,
    bound: int | None = None,
    exhaustive: bool = True,
) -> tuple:
    """Evaluate both clauses of the adequate-part definition by enumeration.

    Clause (i): every nonunit left divisor of ``S`` has a non-unimodular
    left gcd with ``A``. Clause (ii): for every nonunit left divisor ``T'``
    of ``T``, ``S T'`` has a nonunit left divisor left coprime with ``A``.
    ``permissive`` admits a unit as that divisor, which makes (ii) vacuous.
    """
    if S @ T != B:
        raise PreconditionError("B != S @ T")
    bound = oracle_bound(bound)
    _check_int(B, bound)
    clause_i = theorem2_oracle(A, S, bound, exhaustive)
    if permissive:
        return clause_i, True
    clause_ii = True
    for Tp in _witnessed_divisors(T, bound, exhaustive):
        ST = S @ Tp.as_mat()
        if not any(
            leftgcd_oracle(P.as_mat(), A).is_unimodular() for P in _witnessed_divisors(ST, bound, exhaustive)
        ):
            clause_ii = False
            break
    return clause_i, clause_ii
