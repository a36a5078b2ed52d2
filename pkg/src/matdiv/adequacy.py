"""Adequate parts of nonsingular 2x2 matrices.

``adequate_part(B, A)`` factors ``B = S @ T`` so that every nonunit left
divisor of ``S`` shares a nontrivial left divisor with ``A``, while the
remaining factor ``T`` can always be split off coprimely. The construction
chooses the Smith form of ``S`` prime by prime from the left gcd of A and B
and then aligns its left certificate using :func:`split_transform`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .divisors import TransferMatrix, as_decomposition, left_divides, leftgcd_snf, transfer
from .errors import CertificateError, PreconditionError, SingularMatrixError
from .matrix import Mat2, SmithDecomposition, exact_left_quotient, inverse_unimodular, snf, unimodular_complete_row


@dataclass(frozen=True)
class SpectrumPartition:
    """Prime bookkeeping behind the Smith form ``(sigma1, sigma2)`` of the adequate part.

    ``p_primes`` are the primes of omega2 that divide alpha1 (the first
    ``len(omega1_primes)`` of them also divide omega1); ``q_shared`` and
    ``q_free`` are the remaining primes of omega2, split by whether they
    divide tau21.
    """

    omega: tuple
    omega1_primes: tuple
    p_primes: tuple
    q_shared: tuple
    q_free: tuple
    r: dict  # p in omega1 -> exponent in beta1
    r_prime: dict  # p -> exponent in beta2
    u: dict  # q -> exponent in beta1
    u_prime: dict  # q -> exponent in beta2
    d: object
    beta1_prime: object
    beta2_prime: object
    sigma1: object
    sigma2: object

    @property
    def q_primes(self) -> tuple:
        return self.q_shared + self.q_free


@dataclass(frozen=True)
class TransformSplit:
    """``M == F @ L`` with ``u | F[1,0]`` and ``v | L[1,0]``."""

    F: Mat2
    L: Mat2
    u: object
    v: object


@dataclass(frozen=True)
class AdequateMatrixSplit:
    S: Mat2
    T: Mat2
    partition: SpectrumPartition
    split: TransformSplit
    trivial_flag: bool
    t_unimodular: bool = False


@dataclass(frozen=True)
class Theorem2Witness:
    alpha: tuple
    sigma: tuple
    holds: bool
    case: str  # "trivial", "i", "ii" or "spectrum"
    missing: tuple = ()  # primes of sigma_i outside alpha_i, per i
    q_set: tuple = ()
    q_product: object = None
    tested_entry: object = None
    extra: dict = field(default_factory=dict)


def _prod(R, xs):
    acc = R.one
    for x in xs:
        acc = acc * x
    return acc


def theorem2_check(A, S, da: SmithDecomposition | None = None, ds: SmithDecomposition | None = None):
    """Does every left divisor of ``S`` share a nontrivial left divisor with ``A``?

    Decided from Smith data: the spectra of ``sigma_i`` must lie in those of
    ``alpha_i``, and when sigma2 has primes ``q`` outside alpha1 the
    bottom-left entry of ``P_S P_A^-1`` must be divisible by their product.
    Returns ``(bool, Theorem2Witness)``.
    """
    da = da or as_decomposition(A)
    ds = ds or as_decomposition(S)
    R = da.ring
    alpha, sigma = da.alphas, ds.alphas
    if ds.source.is_unimodular():
        return True, Theorem2Witness(alpha, sigma, True, "trivial")
    sa = [R.spectrum(a) for a in alpha]
    ss = [R.spectrum(s) for s in sigma]
    missing = tuple(ss[i].difference(sa[i]).primes for i in range(2))
    if any(missing):
        return False, Theorem2Witness(alpha, sigma, False, "spectrum", missing=missing)
    qs = ss[1].difference(sa[0])
    if not qs:
        return True, Theorem2Witness(alpha, sigma, True, "i", missing=missing)
    qprod = qs.product()
    t21 = transfer(ds, da).t21
    ok = R.divides(qprod, t21)
    return ok, Theorem2Witness(
        alpha, sigma, ok, "ii", missing=missing, q_set=qs.primes, q_product=qprod, tested_entry=t21
    )


def lemma3_check(A, B, S, da=None, db=None, ds=None):
    """Theorem 2's test plus the gcd condition tying ``S`` to ``P_B P_A^-1``.

    Requires ``S`` to be a left divisor of ``B``.
    """
    da = da or as_decomposition(A)
    db = db or as_decomposition(B)
    ds = ds or as_decomposition(S)
    R = da.ring
    if left_divides(ds, db) is None:
        raise PreconditionError("S is not a left divisor of B")
    ok2, w = theorem2_check(da.source, ds.source, da, ds)
    sigma2, beta1 = ds.alpha2, db.alpha1
    qs = R.spectrum(sigma2).difference(R.spectrum(da.alpha1))
    lhs = R.gcd(R.exact_div(sigma2, R.gcd(sigma2, beta1)), qs.product())
    t21 = transfer(db, da).t21
    ok6 = R.divides(lhs, t21)
    extra = dict(w.extra, gcd_term=lhs, tau21=t21, gcd_divides_tau21=ok6, theorem2_holds=ok2)
    return ok2 and ok6, Theorem2Witness(
        w.alpha, w.sigma, ok2 and ok6, w.case, w.missing, qs.primes, qs.product(), w.tested_entry, extra
    )


def build_sigmas(da, db, tau: TransferMatrix | None = None) -> SpectrumPartition:
    """Classify the primes of the left gcd and assemble ``(sigma1, sigma2)``."""
    da, db = as_decomposition(da), as_decomposition(db)
    R = da.ring
    tau = tau or transfer(db, da)
    t21 = tau.t21
    a1, a2 = da.alphas
    b1, b2 = db.alphas
    w1, w2 = leftgcd_snf(da, db)
    sa1 = R.spectrum(a1).primes
    w1_primes = R.spectrum(w1).primes
    fb1, fb2 = R.factor(b1), R.factor(b2)

    # omega1 primes first, keeping sort order within each block
    rest = [q for q in R.spectrum(w2).primes if q not in w1_primes]
    p_primes = tuple(w1_primes) + tuple(q for q in rest if q in sa1)
    qs = [q for q in rest if q not in sa1]
    q_shared = tuple(q for q in qs if R.divides(q, t21))
    q_free = tuple(q for q in qs if not R.divides(q, t21))

    r = {q: fb1.exponent(q) for q in w1_primes}
    r_prime = {q: fb2.exponent(q) for q in p_primes}
    u = {q: fb1.exponent(q) for q in qs}
    u_prime = {q: fb2.exponent(q) for q in qs}

    sigma1 = _prod(R, (q**e for q, e in r.items()))
    sigma2 = _prod(R, (q ** r_prime[q] for q in p_primes))
    sigma2 = sigma2 * _prod(R, (q ** u_prime[q] for q in q_shared))
    sigma2 = sigma2 * _prod(R, (q ** u[q] for q in q_free))

    q_part1 = _prod(R, (q ** u[q] for q in qs))
    beta1_prime = R.exact_div(b1, sigma1)
    d = R.exact_div(beta1_prime, q_part1)
    beta2_prime = R.exact_div(b2, sigma2)

    if not R.is_unit(R.gcd(d, a2)):
        raise CertificateError(f"residual d={d} is not coprime to alpha2={a2}")
    if any(r_prime[q] < r[q] for q in w1_primes) or any(u_prime[q] < u[q] for q in qs):
        raise CertificateError("exponent ordering violated")

    return SpectrumPartition(
        omega=(w1, w2),
        omega1_primes=tuple(w1_primes),
        p_primes=p_primes,
        q_shared=q_shared,
        q_free=q_free,
        r=r,
        r_prime=r_prime,
        u=u,
        u_prime=u_prime,
        d=d,
        beta1_prime=beta1_prime,
        beta2_prime=beta2_prime,
        sigma1=R.canonical(sigma1)[1],
        sigma2=R.canonical(sigma2)[1],
    )


def _solve_linear(R, a, b, m):
    """Distinguished ``c`` with ``a*c = b (mod m)``, or None if unsolvable."""
    g = R.gcd(a, m) if a else R.canonical(m)[1]
    if not R.divides(g, b):
        return None
    m2 = R.exact_div(m, g)
    if R.is_unit(m2):
        return R.zero
    return R.reduce(R.exact_div(b, g) * R.inverse_mod(R.exact_div(a, g), m2), m2)


def split_transform(M: Mat2, u, v) -> TransformSplit:
    """Factor a unimodular ``M`` as ``F @ L`` with ``u | F[1,0]`` and ``v | L[1,0]``.

    ``v`` must be squarefree and ``gcd(u, v)`` must divide ``M[1,0]``.
    We look for ``C`` with bottom row ``(u*c21, c22)`` such that
    ``v | (C @ M)[1,0]``, then return ``F = C^-1`` and ``L = C @ M``.
    """
    R = M.ring
    u, v = R.coerce(u), R.coerce(v)
    if not M.is_unimodular():
        raise PreconditionError("split_transform needs a unimodular matrix")
    if not u or not v:
        raise PreconditionError("u and v must be nonzero")
    fv = R.factor(v)
    if any(e > 1 for _, e in fv.factors):
        raise PreconditionError(f"v={v} is not squarefree")
    m11, m21 = M[0, 0], M[1, 0]
    if not R.divides(R.gcd(u, v), m21):
        raise PreconditionError(f"gcd(u, v) does not divide {m21}")

    I = Mat2.identity(R)
    if R.divides(u, m21):
        F, L = M, I
    elif R.divides(v, m21):
        F, L = I, M
    else:
        c21 = _solve_linear(R, u * m11, -m21, v)
        if c21 is not None:
            C = Mat2(R, ((1, 0), (u * c21, 1)))
        else:
            C = _general_row(R, u, v, m11, m21, fv.primes)
        F, L = inverse_unimodular(C), C @ M

    if F @ L != M or not R.divides(u, F[1, 0]) or not R.divides(v, L[1, 0]):
        raise CertificateError("transform split failed verification")
    if not (F.is_unimodular() and L.is_unimodular()):
        raise CertificateError("transform split produced a non-unimodular factor")
    return TransformSplit(F, L, u, v)


def _general_row(R, u, v, m11, m21, qs) -> Mat2:
    # per prime q | v pick (c21, c22) mod q, glue with CRT, then repair coprimality
    r21, r22 = [], []
    for q in qs:
        if R.divides(q, m21):
            r21.append(R.zero)
            r22.append(R.one)
        else:
            r21.append(R.one)
            r22.append(R.reduce(-u * m11 * R.inverse_mod(m21, q), q))
    c21 = R.crt(r21, qs)
    c22 = R.crt(r22, qs)
    a = u * c21
    if not R.is_unit(R.gcd(a, c22)):
        c22 = c22 + R.rp_split(a, c22).t * v
    return unimodular_complete_row(a, c22, R)


def adequate_part(B, A) -> AdequateMatrixSplit:
    """Left adequate part of ``B`` with respect to ``A``: ``B == S @ T``."""
    db, da = as_decomposition(B), as_decomposition(A)
    if db.source.is_singular() or da.source.is_singular():
        raise SingularMatrixError("adequate_part needs nonsingular matrices")
    R = da.ring
    tau = transfer(db, da)
    part = build_sigmas(da, db, tau)
    s1, s2 = part.sigma1, part.sigma2
    u = R.exact_div(s2, R.gcd(s2, db.alpha1))
    v = _prod(R, part.q_primes)
    split = split_transform(tau.tau, u, v)

    P_S = inverse_unimodular(split.F) @ db.P
    S = inverse_unimodular(P_S) @ Mat2.diag(R, s1, s2)
    T = exact_left_quotient(S, db.source)
    if T is None or S @ T != db.source:
        raise CertificateError("adequate part does not divide B")
    ds = snf(S)
    if ds.alphas != (s1, s2):
        raise CertificateError(f"adequate part has Smith form {ds.alphas}, expected {(s1, s2)}")
    return AdequateMatrixSplit(S, T, part, split, S.is_unimodular(), T.is_unimodular())


def right_adequate_part(B: Mat2, A: Mat2) -> AdequateMatrixSplit:
    """Right-hand version via transposes; here ``B == T @ S``."""
    left = adequate_part(B.transpose(), A.transpose())
    return AdequateMatrixSplit(
        left.S.transpose(), left.T.transpose(), left.partition, left.split, left.trivial_flag, left.t_unimodular
    )
