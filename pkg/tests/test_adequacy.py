import random

import pytest
from conftest import F5, int_mats, poly_mats
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from matdiv import adequacy as ad
from matdiv.divisors import left_coprime, left_divides, leftgcd_snf
from matdiv.errors import PreconditionError
from matdiv.matrix import Mat2, snf
from matdiv.oracle import definition_check, theorem2_oracle
from matdiv.ring import ZZ
from matdiv.sampling import random_unimodular

I = Mat2.identity(ZZ)
SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def test_build_sigmas_example2(example2):
    A, B, _, _ = example2
    part = ad.build_sigmas(A, B)
    assert (part.sigma1, part.sigma2) == (2, 2700)
    assert part.q_shared == (3,) and part.q_free == (5,)
    assert part.omega == (2, 30)


def test_build_sigmas_example1(example1):
    A, B = example1
    part = ad.build_sigmas(A, B)
    assert (part.sigma1, part.sigma2) == (9, 1890)


def test_build_sigmas_coprime():
    part = ad.build_sigmas(Mat2.diag(ZZ, 1, 6), Mat2.diag(ZZ, 1, 35))
    assert (part.sigma1, part.sigma2) == (1, 1)
    assert part.p_primes == () and part.q_primes == ()


def test_split_transform_example1():
    sp = ad.split_transform(Mat2.of(ZZ, [[1, 0], [7, 1]]), 42, 35)
    assert sp.F == Mat2.of(ZZ, [[1, 0], [42, 1]])
    assert sp.L == Mat2.of(ZZ, [[1, 0], [-35, 1]])


def test_split_transform_example2_shape():
    M = Mat2.of(ZZ, [[1, 0], [3, 1]])
    sp = ad.split_transform(M, 6, 15)
    assert sp.F @ sp.L == M
    assert sp.F[1, 0] % 6 == 0 and sp.L[1, 0] % 15 == 0


def test_split_transform_trivial_v():
    M = Mat2.of(ZZ, [[1, 0], [6, 1]])
    sp = ad.split_transform(M, 3, 1)
    assert (sp.F, sp.L) == (M, I)


def test_split_transform_preconditions():
    M = Mat2.of(ZZ, [[1, 0], [1, 1]])
    with pytest.raises(PreconditionError):
        ad.split_transform(M, 6, 15)  # gcd 3 does not divide 1
    with pytest.raises(PreconditionError):
        ad.split_transform(M, 1, 4)  # v not squarefree
    with pytest.raises(PreconditionError):
        ad.split_transform(Mat2.diag(ZZ, 1, 2), 1, 3)


@settings(max_examples=300)
@given(
    st.integers(0, 2**32),
    st.integers(1, 60),
    st.sets(st.sampled_from(SMALL_PRIMES), min_size=1, max_size=3),
)
def test_split_transform_random(seed, u, qset):
    M = random_unimodular(ZZ, random.Random(seed), steps=5, bound=40)
    v = 1
    for q in qset:
        v *= q
    assume(M[1, 0] % ZZ.gcd(u, v) == 0)
    sp = ad.split_transform(M, u, v)
    assert sp.F @ sp.L == M
    assert sp.F[1, 0] % u == 0 and sp.L[1, 0] % v == 0
    assert sp.F.is_unimodular() and sp.L.is_unimodular()


@settings(max_examples=100)
@given(st.integers(0, 2**32))
def test_split_transform_random_poly(seed):
    rng = random.Random(seed)
    x = F5.x
    M = random_unimodular(F5, rng, steps=4)
    u = x + rng.randrange(5)
    v = x**2 + 2  # irreducible over F_5
    assume(F5.divides(F5.gcd(u, v), M[1, 0]))
    sp = ad.split_transform(M, u, v)
    assert sp.F @ sp.L == M
    assert F5.divides(u, sp.F[1, 0]) and F5.divides(v, sp.L[1, 0])


def test_adequate_part_example2(example2):
    A, B, S, _ = example2
    res = ad.adequate_part(B, A)
    assert snf(res.S).alphas == (2, 2700)
    assert res.S @ res.T == B
    assert not res.trivial_flag
    assert res.S == S


def test_adequate_part_example1(example1):
    A, B = example1
    res = ad.adequate_part(B, A)
    assert res.S == Mat2.of(ZZ, [[9, 0], [315, 1890]])
    assert res.T == Mat2.of(ZZ, [[5, 0], [-1, 65]])


def test_adequate_part_coprime():
    A = Mat2.diag(ZZ, 2, 6)
    B = Mat2.of(ZZ, [[5, 1], [0, 7]])
    res = ad.adequate_part(B, A)
    assert res.trivial_flag and res.S.is_unimodular()
    assert left_divides(B, res.T) is not None and left_divides(res.T, B) is not None


def test_right_adequate_part(example2):
    A, B, _, _ = example2
    res = ad.right_adequate_part(B.transpose(), A.transpose())
    assert res.T @ res.S == B.transpose()


def test_theorem2_examples(example2):
    A3 = Mat2.diag(ZZ, 2, 60)
    ok, w = ad.theorem2_check(A3, Mat2.of(ZZ, [[1, 0], [30, 27]]))
    assert ok and w.case == "ii" and w.q_set == (3,)
    ok, w = ad.theorem2_check(Mat2.diag(ZZ, 2, 420), Mat2.diag(ZZ, 1, 4))
    assert ok and w.case == "i"
    ok, w = ad.theorem2_check(A3, Mat2.of(ZZ, [[0, 5], [1, 0]]))
    assert not ok and w.tested_entry == 1
    assert ad.theorem2_check(A3, Mat2.of(ZZ, [[2, 1], [1, 1]]))[0]
    A, _, S, S1 = example2
    assert ad.theorem2_check(A, S)[0] and ad.theorem2_check(A, S1)[0]


def test_theorem2_spectrum_failure():
    ok, w = ad.theorem2_check(Mat2.diag(ZZ, 2, 60), Mat2.diag(ZZ, 1, 7))
    assert not ok and w.case == "spectrum" and w.missing[1] == (7,)


def test_lemma3_example2(example2):
    A, B, S, _ = example2
    ok, w = ad.lemma3_check(A, B, S)
    assert ok and w.extra["gcd_term"] == 3 and w.extra["tau21"] == 3


def test_lemma3_example1(example1):
    A, B = example1
    ok, w = ad.lemma3_check(A, B, Mat2.of(ZZ, [[9, 0], [315, 1890]]))
    assert ok and w.extra["gcd_term"] == 7 and w.extra["tau21"] == 7


def test_lemma3_unimodular_vacuous(example2):
    A, B, _, _ = example2
    assert ad.lemma3_check(A, B, I)[0]


def test_lemma3_engineered_failure(example2):
    # same Smith forms as Example 2, but the left certificate makes tau21 = 1
    A = example2[0]
    P_inv = Mat2.of(ZZ, [[1, 0], [-1, 1]])
    B = P_inv @ Mat2.diag(ZZ, 450, 67500)
    S = P_inv @ Mat2.diag(ZZ, 2, 2700)
    ok, w = ad.lemma3_check(A, B, S)
    assert not ok
    assert w.extra["tau21"] == 1 and w.extra["gcd_term"] == 3


def test_lemma3_requires_divisor(example2):
    A, B, _, _ = example2
    with pytest.raises(PreconditionError):
        ad.lemma3_check(A, B, Mat2.diag(ZZ, 1, 7))


def test_example3_critique(example3):
    A, B = example3
    S, T = Mat2.diag(ZZ, 1, 3), Mat2.of(ZZ, [[1, 0], [1, 225]])
    assert S @ T == B and left_coprime(A, T)
    S1 = Mat2.of(ZZ, [[1, 0], [30, 27]])
    T1 = left_divides(S1, B)
    assert T1 is not None and ad.theorem2_check(A, S1)[0]
    assert left_divides(S, S1) is not None
    # the coprime-cofactor reading picks S, but S fails clause (ii)
    assert definition_check(B, S, T, A) == (True, False)
    assert definition_check(B, S1, T1, A) == (True, True)


@settings(max_examples=150)
@given(int_mats(6), int_mats(6), int_mats(6))
def test_adequate_part_structure(D, X1, Y):
    A, B = D @ X1, D @ Y
    res = ad.adequate_part(B, A)
    assert res.S @ res.T == B
    assert snf(res.S).alphas == (res.partition.sigma1, res.partition.sigma2)
    assert ad.theorem2_check(A, res.S)[0]
    assert ad.lemma3_check(A, B, res.S)[0]
    assert res.trivial_flag == (leftgcd_snf(A, B) == (1, 1))


@settings(max_examples=60)
@given(poly_mats(1), poly_mats(1), poly_mats(1))
def test_adequate_part_poly(D, X1, Y):
    A, B = D @ X1, D @ Y
    res = ad.adequate_part(B, A)
    assert res.S @ res.T == B
    assert ad.theorem2_check(A, res.S)[0]


@settings(max_examples=100)
@given(int_mats(4), int_mats(5), int_mats(5))
def test_adequate_part_matches_oracle(D, X1, Y):
    A, B = D @ X1, D @ Y
    assume(abs(B.det()) <= 2000 and abs(A.det()) <= 5000)
    res = ad.adequate_part(B, A)
    assert definition_check(B, res.S, res.T, A) == (True, True)
    assert ad.theorem2_check(A, res.S)[0] == theorem2_oracle(A, res.S)
