import random

import pytest
from conftest import int_mats, poly_mats
from hypothesis import given, settings
from hypothesis import strategies as st

from matdiv import divisors as dv
from matdiv.errors import PreconditionError
from matdiv.matrix import Mat2, snf
from matdiv.oracle import leftgcd_oracle
from matdiv.ring import ZZ
from matdiv.sampling import random_unimodular, recertify

I = Mat2.identity(ZZ)


def test_transfer_examples(example2, example1):
    A, B, _, _ = example2
    assert dv.transfer(B, A).tau == Mat2.of(ZZ, [[1, 0], [3, 1]])
    assert dv.transfer(A, A).tau == I
    A1, B1 = example1
    assert dv.transfer(B1, A1).tau == Mat2.of(ZZ, [[1, 0], [7, 1]])


def test_leftgcd_snf_examples(example2, example3):
    A, B, _, _ = example2
    assert dv.leftgcd_snf(A, B) == (2, 30)
    assert dv.leftgcd_snf(A, A) == (2, 210)
    A3, B3 = example3
    assert dv.leftgcd_snf(A3, B3) == (1, 3)


def test_left_coprime_examples(example3):
    A, _ = example3
    T = Mat2.of(ZZ, [[1, 0], [1, 225]])
    T_prime = Mat2.of(ZZ, [[1, 0], [3, 1]]) @ Mat2.diag(ZZ, 1, 225)
    assert dv.left_coprime(A, T)
    assert not dv.left_coprime(A, A)
    assert not dv.left_coprime(A, T_prime)


def test_left_divides_examples(example2):
    A, B, S, _ = example2
    assert dv.left_divides(S, B) == Mat2.of(ZZ, [[225, 0], [2, 25]])
    assert dv.left_divides(I, A) == A
    assert dv.left_divides(Mat2.diag(ZZ, 2, 2), Mat2.diag(ZZ, 1, 2)) is None


def test_right_divides():
    B = Mat2.of(ZZ, [[2, 1], [0, 3]])
    C = Mat2.of(ZZ, [[1, 4], [-2, 5]])
    assert dv.right_divides(B, C @ B) == C


def test_divisor_from_params_examples():
    A = Mat2.diag(ZZ, 2, 210)
    assert dv.divisor_from_params(A, 2, 210, I) == A
    D = dv.divisor_from_params(A, 1, 2, I)
    assert D == Mat2.diag(ZZ, 1, 2) and dv.left_divides(D, A) is not None
    with pytest.raises(PreconditionError):
        dv.divisor_from_params(A, 1, 4, I)


def test_divisor_from_params_sweep():
    # every admissible (beta1, beta2, l21) yields a genuine divisor
    A = Mat2.of(ZZ, [[2, 4], [6, 72]])
    da = snf(A)
    a1, a2 = da.alphas
    for b1 in (1, 2):
        for b2 in range(b1, a2 + 1, b1):
            if a2 % b2:
                continue
            step = b2 // ZZ.gcd(b2, a1)
            for k in range(3):
                L = Mat2.of(ZZ, [[1, 0], [k * step, 1]])
                D = dv.divisor_from_params(da, b1, b2, L)
                assert snf(D).alphas == (b1, b2)


def test_absorb_prime_divisor():
    A = Mat2.diag(ZZ, 2, 60)
    B = Mat2.diag(ZZ, 1, 3) @ Mat2.of(ZZ, [[1, 1], [0, 1]])
    C = dv.absorb_prime_divisor(A, B)
    assert C is not None and B @ C == A
    assert dv.absorb_prime_divisor(A, Mat2.diag(ZZ, 1, 7)) is None
    with pytest.raises(PreconditionError):
        dv.absorb_prime_divisor(A, Mat2.diag(ZZ, 1, 6))


@settings(max_examples=300)
@given(int_mats(), int_mats())
def test_leftgcd_snf_matches_hermite(A, B):
    assert dv.leftgcd_snf(A, B) == leftgcd_oracle(A, B).snf_diagonal()


@settings(max_examples=300)
@given(int_mats(), int_mats())
def test_structural_matches_direct(A, B):
    assert (dv.left_divides_direct(B, A) is not None) == dv.left_divides_structural(B, A)


@settings(max_examples=200)
@given(int_mats(8), int_mats(8))
def test_products_are_divisible(B, C):
    A = B @ C
    assert dv.left_divides_structural(B, A)
    assert dv.left_divides(B, A) == C


@settings(max_examples=100)
@given(poly_mats(2), poly_mats(2))
def test_poly_products_are_divisible(B, C):
    assert dv.left_divides(B, B @ C) == C


@settings(max_examples=100)
@given(poly_mats(), poly_mats())
def test_poly_leftgcd_matches_hermite(A, B):
    assert dv.leftgcd_snf(A, B) == leftgcd_oracle(A, B).snf_diagonal()


@settings(max_examples=100)
@given(int_mats(), int_mats(), st.integers(0, 2**32))
def test_certificate_choice_independence(A, B, seed):
    rng = random.Random(seed)
    da, db = snf(A), snf(B)
    da2, db2 = recertify(da, rng), recertify(db, rng)
    assert dv.leftgcd_snf(da, db) == dv.leftgcd_snf(da2, db2)
    assert dv.left_coprime(da, db) == dv.left_coprime(da2, db2)
    assert dv.left_divides_structural(db, da) == dv.left_divides_structural(db2, da2)


@settings(max_examples=100)
@given(int_mats(10), st.integers(0, 2**32))
def test_unimodular_factors_preserve_gcd(A, seed):
    U = random_unimodular(ZZ, random.Random(seed))
    assert dv.leftgcd_snf(A, A @ U) == snf(A).alphas


def test_lemma1_engineered():
    # prime-determinant B sharing a factor with A is always absorbed
    rng = random.Random(1)
    cases = 0
    while cases < 300:
        q = rng.choice((2, 3, 5, 7, 11))
        B = random_unimodular(ZZ, rng) @ Mat2.diag(ZZ, 1, q) @ random_unimodular(ZZ, rng)
        A = random_unimodular(ZZ, rng) @ Mat2.diag(ZZ, rng.randint(1, 6), q * rng.randint(1, 30))
        A = A @ random_unimodular(ZZ, rng)
        if dv.left_coprime(A, B):
            assert dv.absorb_prime_divisor(A, B) is None
            continue
        C = dv.absorb_prime_divisor(A, B)
        assert C is not None and B @ C == A
        cases += 1
