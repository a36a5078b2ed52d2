"""Random test data: elements, unimodular matrices, alternative certificates."""

from __future__ import annotations

import random

from .matrix import Mat2, SmithDecomposition, snf
from .ring import ZZ, Poly, Ring


def random_element(ring: Ring, rng: random.Random, bound: int = 50, degree: int = 3):
    if ring == ZZ:
        return rng.randint(-bound, bound)
    d = rng.randint(-1, degree)
    return Poly(ring.p, [rng.randrange(ring.p) for _ in range(d + 1)])


def random_unit(ring: Ring, rng: random.Random):
    if ring == ZZ:
        return rng.choice((1, -1))
    return Poly(ring.p, (rng.randrange(1, ring.p),))


def random_unimodular(ring: Ring, rng: random.Random, steps: int = 4, bound: int = 3) -> Mat2:
    U = Mat2.diag(ring, random_unit(ring, rng), random_unit(ring, rng))
    for _ in range(steps):
        k = random_element(ring, rng, bound=bound, degree=1)
        kind = rng.randrange(3)
        if kind == 0:
            E = Mat2(ring, ((1, k), (0, 1)))
        elif kind == 1:
            E = Mat2(ring, ((1, 0), (k, 1)))
        else:
            E = Mat2(ring, ((0, 1), (1, 0)))
        U = U @ E
    return U


def random_matrix(
    ring: Ring,
    rng: random.Random,
    bound: int = 50,
    degree: int = 3,
    det_bound: int | None = None,
    max_tries: int = 10_000,
) -> Mat2:
    """Nonsingular matrix with entries in ``[-bound, bound]`` (or degree <= ``degree``)."""
    for _ in range(max_tries):
        M = Mat2(ring, tuple(tuple(random_element(ring, rng, bound, degree) for _ in range(2)) for _ in range(2)))
        d = M.det()
        if not d:
            continue
        if det_bound is not None and ring == ZZ and abs(d) > det_bound:
            continue
        return M
    raise RuntimeError("could not sample a nonsingular matrix")


def recertify(dec: SmithDecomposition, rng: random.Random, steps: int = 4) -> SmithDecomposition:
    """Another valid certificate for ``dec.source``, obtained through ``U A V``."""
    R = dec.ring
    U = random_unimodular(R, rng, steps)
    V = random_unimodular(R, rng, steps)
    d = snf(U @ dec.source @ V)
    alt = SmithDecomposition(dec.source, d.P @ U, d.alpha1, d.alpha2, V @ d.Q)
    assert alt.check() and alt.alphas == dec.alphas
    return alt


def random_divisor_chain(ring: Ring, rng: random.Random, primes, max_exp: int = 2) -> tuple:
    """Random ``(a1, a2)`` with ``a1 | a2`` built from the given primes."""
    a1, a2 = ring.one, ring.one
    for q in primes:
        e1 = rng.randint(0, max_exp)
        e2 = e1 + rng.randint(0, max_exp)
        a1, a2 = a1 * q**e1, a2 * q**e2
    return a1, a2


def with_snf(ring: Ring, rng: random.Random, a1, a2, steps: int = 3) -> Mat2:
    """Random matrix ``U diag(a1, a2) V`` with the given invariant factors."""
    U = random_unimodular(ring, rng, steps)
    V = random_unimodular(ring, rng, steps)
    return U @ Mat2.diag(ring, a1, a2) @ V


__all__ = [
    "random_element",
    "random_unit",
    "random_unimodular",
    "random_matrix",
    "recertify",
    "random_divisor_chain",
    "with_snf",
]
