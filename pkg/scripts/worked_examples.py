"""Reproduce the three worked examples with concrete primes and print the key quantities."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from matdiv.adequacy import adequate_part, build_sigmas, lemma3_check, theorem2_check
from matdiv.divisors import left_coprime, left_divides, leftgcd_snf, transfer
from matdiv.matrix import Mat2, exact_left_quotient, snf
from matdiv.oracle import definition_check
from matdiv.ring import ZZ


@dataclass
class ExampleConfig:
    """Primes substituted for the symbols of the examples."""

    a: int = 2
    b: int = 3
    c: int = 5
    d: int = 3
    f: int = 7
    m: int = 11
    n: int = 13
    oracle_bound: int = 10**8


def example1(cfg: ExampleConfig):
    a, b, c, f, m, n = cfg.a, cfg.b, cfg.c, cfg.f, cfg.m, cfg.n
    A = Mat2.diag(ZZ, a * b, a * b**2 * c * f * m)
    B = Mat2.of(ZZ, [[b**2 * c, 0], [-(b**2) * c * f, a * b**3 * c**2 * f * n]])
    print("Example 1")
    print(f"  A = {A.tolist()}, B = {B.tolist()}")
    print(f"  tau = {transfer(B, A).tau.tolist()}")
    res = adequate_part(B, A)
    print(f"  S = {res.S.tolist()}  SNF {snf(res.S).alphas}")
    print(f"  T = {res.T.tolist()}")
    ok, w = lemma3_check(A, B, res.S)
    print(f"  gcd test: gcd = {w.extra['gcd_term']} divides tau21 = {w.extra['tau21']}: {ok}")


def example2(cfg: ExampleConfig):
    A = Mat2.diag(ZZ, 2, 210)
    B = Mat2.of(ZZ, [[450, 0], [-1350, 67500]])
    print("Example 2")
    print(f"  SNF((A,B)_l) = {leftgcd_snf(A, B)}")
    part = build_sigmas(A, B)
    print(f"  sigma = ({part.sigma1}, {part.sigma2}), shared q = {part.q_shared}, free q = {part.q_free}")
    res = adequate_part(B, A)
    print(f"  S = {res.S.tolist()}, T = {res.T.tolist()}")
    S1 = Mat2.of(ZZ, [[2, 0], [30, 2700]])
    print(f"  S1 = {S1.tolist()}, T1 = {left_divides(S1, B).tolist()}")
    print(f"  theorem 2: S {theorem2_check(A, res.S)[0]}, S1 {theorem2_check(A, S1)[0]}")
    print(f"  S1^-1 S integral: {exact_left_quotient(S1, res.S) is not None}")
    clauses = definition_check(B, res.S, res.T, A, bound=cfg.oracle_bound, exhaustive=False)
    print(f"  definition clauses (prime-determinant oracle): {clauses}")


def example3(cfg: ExampleConfig):
    a, c, d = cfg.a, cfg.c, cfg.d
    A = Mat2.diag(ZZ, a, a**2 * d * c)
    B = Mat2.of(ZZ, [[1, 0], [d, d**3 * c**2]])
    S, T = Mat2.diag(ZZ, 1, d), Mat2.of(ZZ, [[1, 0], [1, d**2 * c**2]])
    S1 = Mat2.of(ZZ, [[1, 0], [d**3 + d, d**3]])
    T1 = exact_left_quotient(S1, B)
    print("Example 3")
    print(f"  B = S T: {S @ T == B}, (A,T)_l = I: {left_coprime(A, T)}")
    print(f"  B = S1 T1 with T1 = {T1.tolist()}, theorem 2 for S1: {theorem2_check(A, S1)[0]}")
    print(f"  S1 = S {left_divides(S, S1).tolist()}")
    print(f"  clauses for (S, T): {definition_check(B, S, T, A, bound=cfg.oracle_bound)}")
    print(f"  clauses for (S1, T1): {definition_check(B, S1, T1, A, bound=cfg.oracle_bound)}")
    res = adequate_part(B, A)
    print(f"  computed adequate part S = {res.S.tolist()}, T = {res.T.tolist()}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--which", choices=["1", "2", "3", "all"], default="all")
    args = ap.parse_args()
    cfg = ExampleConfig()
    for k, fn in (("1", example1), ("2", example2), ("3", example3)):
        if args.which in (k, "all"):
            fn(cfg)


if __name__ == "__main__":
    main()
