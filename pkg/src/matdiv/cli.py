"""Command-line front end.

Every subcommand prints a JSON report on stdout and a one-line summary on
stderr. Exit codes: 0 success/true, 1 false/absent, 2 input error,
3 failed self-check (a bug), 4 non-prime modulus, 5 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import adequacy, divisors, oracle
from .document import EXIT_LIMIT, InputError, encode_element, encode_matrix, parse_matrix_file
from .errors import CertificateError, FactorizationLimitError, OracleBoundError, PreconditionError
from .matrix import exact_left_quotient, snf

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _require(cond: bool, what: str):
    if not cond:
        raise CertificateError(f"self-check failed: {what}")


def _load(*paths) -> list:
    mats = [parse_matrix_file(p) for p in paths]
    if any(M.ring != mats[0].ring for M in mats):
        raise InputError("input matrices live over different rings")
    return mats


def _els(xs) -> list:
    return [encode_element(x) for x in xs]


def _factor_report(R, x) -> dict:
    f = R.factor(x)
    return {"unit": encode_element(f.unit), "factors": [[encode_element(q), e] for q, e in f.factors]}


def _witness(w) -> dict:
    out = {
        "case": w.case,
        "alpha": _els(w.alpha),
        "sigma": _els(w.sigma),
        "missing": [_els(m) for m in w.missing],
        "q_set": _els(w.q_set),
        "q_product": None if w.q_product is None else encode_element(w.q_product),
        "tested_entry": None if w.tested_entry is None else encode_element(w.tested_entry),
    }
    for k, v in w.extra.items():
        out[k] = v if isinstance(v, bool) else encode_element(v)
    return out


def cmd_snf(args):
    (M,) = _load(args.matrix)
    d = snf(M)
    _require(d.P @ M @ d.Q == d.diag, "P A Q == diag")
    _require(d.P.is_unimodular() and d.Q.is_unimodular(), "P, Q unimodular")
    rep = {
        "ring": M.ring.describe(),
        "input": encode_matrix(M),
        "P": encode_matrix(d.P),
        "diag": _els(d.alphas),
        "Q": encode_matrix(d.Q),
        "verified": True,
    }
    return EXIT_TRUE, rep, f"SNF = diag({d.alpha1}, {d.alpha2})"


def cmd_leftgcd(args):
    A, B = _load(args.A, args.B)
    da, db = snf(A), snf(B)
    d1, d2 = divisors.leftgcd_snf(da, db)
    g = oracle.leftgcd_result(A, B)
    _require(g.gcd_matrix @ g.cofactorA == A and g.gcd_matrix @ g.cofactorB == B, "D divides A and B")
    _require((g.d1, g.d2) == (d1, d2), "certificate formula agrees with Hermite left gcd")
    rep = {
        "ring": A.ring.describe(),
        "diag": _els((d1, d2)),
        "transfer": encode_matrix(divisors.transfer(db, da).tau),
        "gcd_matrix": encode_matrix(g.gcd_matrix),
        "cofactorA": encode_matrix(g.cofactorA),
        "cofactorB": encode_matrix(g.cofactorB),
        "verified": True,
    }
    return EXIT_TRUE, rep, f"SNF((A,B)_l) = diag({d1}, {d2})"


def cmd_coprime(args):
    A, B = _load(args.A, args.B)
    d1, d2 = divisors.leftgcd_snf(A, B)
    ok = divisors.left_coprime(A, B)
    _require(ok == oracle.leftgcd_oracle(A, B).is_unimodular(), "coprimality agrees with Hermite left gcd")
    rep = {"ring": A.ring.describe(), "coprime": ok, "diag": _els((d1, d2)), "verified": True}
    return (EXIT_TRUE if ok else EXIT_FALSE), rep, f"left coprime: {ok}"


def cmd_divides(args):
    B, A = _load(args.B, args.A)
    C = divisors.left_divides(B, A)
    if C is not None:
        _require(B @ C == A, "B C == A")
    else:
        _require(exact_left_quotient(B, A) is None, "no integral quotient")
    rep = {"ring": A.ring.describe(), "divides": C is not None, "quotient": None if C is None else encode_matrix(C)}
    rep["verified"] = True
    return (EXIT_TRUE if C is not None else EXIT_FALSE), rep, f"B left-divides A: {C is not None}"


def cmd_spectrum(args):
    (M,) = _load(args.matrix)
    R = M.ring
    d = snf(M)
    spec = R.spectrum(d.alpha2)
    fa2 = R.factor(d.alpha2)
    _require(R.canonical(fa2.expand())[1] == d.alpha2, "factorization reconstructs alpha2")
    rep = {
        "ring": R.describe(),
        "diag": _els(d.alphas),
        "alpha1": _factor_report(R, d.alpha1),
        "alpha2": _factor_report(R, d.alpha2),
        "spectrum": _els(spec.primes),
        "verified": True,
    }
    return EXIT_TRUE, rep, "spectrum = {" + ", ".join(str(q) for q in spec.primes) + "}"


def _partition(part) -> dict:
    def pairs(d):
        return [[encode_element(q), e] for q, e in d.items()]

    return {
        "omega": _els(part.omega),
        "p_primes": _els(part.p_primes),
        "q_shared": _els(part.q_shared),
        "q_free": _els(part.q_free),
        "r": pairs(part.r),
        "r_prime": pairs(part.r_prime),
        "u": pairs(part.u),
        "u_prime": pairs(part.u_prime),
        "d": encode_element(part.d),
        "beta1_prime": encode_element(part.beta1_prime),
        "beta2_prime": encode_element(part.beta2_prime),
        "sigma": _els((part.sigma1, part.sigma2)),
    }


def cmd_adequate_part(args):
    B, A = _load(args.B, args.A)
    res = adequacy.adequate_part(B, A)
    _require(res.S @ res.T == B, "S T == B")
    _require(snf(res.S).alphas == (res.partition.sigma1, res.partition.sigma2), "SNF(S) == sigma")
    _require(res.split.F @ res.split.L == divisors.transfer(B, A).tau, "F L == P_B P_A^-1")
    rep = {
        "ring": A.ring.describe(),
        "S": encode_matrix(res.S),
        "T": encode_matrix(res.T),
        "sigma": _els((res.partition.sigma1, res.partition.sigma2)),
        "partition": _partition(res.partition),
        "F": encode_matrix(res.split.F),
        "L": encode_matrix(res.split.L),
        "u": encode_element(res.split.u),
        "v": encode_element(res.split.v),
        "trivial_flag": res.trivial_flag,
        "t_unimodular": res.t_unimodular,
        "verified": True,
    }
    return EXIT_TRUE, rep, f"adequate part S with SNF diag({res.partition.sigma1}, {res.partition.sigma2})"


def cmd_theorem2(args):
    A, S = _load(args.A, args.S)
    ok, w = adequacy.theorem2_check(A, S)
    rep = {"ring": A.ring.describe(), "holds": ok, "witness": _witness(w)}
    return (EXIT_TRUE if ok else EXIT_FALSE), rep, f"theorem 2 criterion: {ok} (case {w.case})"


def cmd_lemma3(args):
    A, B, S = _load(args.A, args.B, args.S)
    ok, w = adequacy.lemma3_check(A, B, S)
    rep = {"ring": A.ring.describe(), "holds": ok, "witness": _witness(w)}
    return (EXIT_TRUE if ok else EXIT_FALSE), rep, f"lemma 3 criterion: {ok}"


def _hnf(H) -> list:
    return encode_matrix(H.as_mat())


def cmd_oracle_divisors(args):
    (M,) = _load(args.matrix)
    divs = oracle.enumerate_left_divisors(M, include_units=not args.nonunit)
    for H in divs:
        _require(exact_left_quotient(H.as_mat(), M) is not None, "enumerated divisor divides")
    rep = {"ring": M.ring.describe(), "count": len(divs), "divisors": [_hnf(H) for H in divs], "verified": True}
    return EXIT_TRUE, rep, f"{len(divs)} left divisors"


def cmd_oracle_check(args):
    B, A = _load(args.B, args.A)
    if args.S:
        (S,) = _load(args.S)
        if S.ring != B.ring:
            raise InputError("S lives over a different ring")
        if args.T:
            (T,) = _load(args.T)
        else:
            T = exact_left_quotient(S, B)
            if T is None:
                raise InputError("S is not a left divisor of B")
    else:
        res = adequacy.adequate_part(B, A)
        S, T = res.S, res.T
    ci, cii = oracle.definition_check(
        B, S, T, A, permissive=args.permissive_clause_ii, exhaustive=args.exhaustive
    )
    ok = ci and cii
    rep = {
        "ring": A.ring.describe(),
        "S": encode_matrix(S),
        "T": encode_matrix(T),
        "clause_i": ci,
        "clause_ii": cii,
        "permissive_clause_ii": args.permissive_clause_ii,
    }
    return (EXIT_TRUE if ok else EXIT_FALSE), rep, f"clause (i): {ci}, clause (ii): {cii}"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matdiv", description="Divisor theory of nonsingular 2x2 matrices over PIDs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *positional, help=None):
        sp = sub.add_parser(name, help=help)
        for arg in positional:
            sp.add_argument(arg)
        sp.set_defaults(func=fn)
        return sp

    add("snf", cmd_snf, "matrix", help="Smith normal form with transform certificates")
    add("leftgcd", cmd_leftgcd, "A", "B", help="left gcd of A and B")
    add("coprime", cmd_coprime, "A", "B", help="are A and B left coprime?")
    add("divides", cmd_divides, "B", "A", help="does B left-divide A?")
    add("spectrum", cmd_spectrum, "matrix", help="spectrum of the second invariant factor")
    add("adequate-part", cmd_adequate_part, "B", "A", help="left adequate part of B with respect to A")
    add("theorem2", cmd_theorem2, "A", "S", help="does every left divisor of S meet A?")
    add("lemma3", cmd_lemma3, "A", "B", "S", help="Theorem 2 plus the transfer-matrix gcd condition")
    sp = add("oracle-divisors", cmd_oracle_divisors, "matrix", help="enumerate left divisors (integers)")
    sp.add_argument("--nonunit", action="store_true", help="omit the identity")
    sp = add("oracle-check", cmd_oracle_check, "B", "A", help="check the adequacy clauses by enumeration")
    sp.add_argument("--S", help="candidate adequate part (default: computed)")
    sp.add_argument("--T", help="cofactor with B = S T (default: computed)")
    sp.add_argument("--permissive-clause-ii", action="store_true", help="allow a unit p in clause (ii)")
    sp.add_argument(
        "--exhaustive",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="enumerate all divisors (default) instead of prime-determinant ones",
    )
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        code, report, summary = args.func(args)
    except InputError as e:
        print(f"error: {e}", file=stderr)
        return e.exit_code
    except (FactorizationLimitError, OracleBoundError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_LIMIT
    except CertificateError as e:
        print(f"internal error: {e}", file=stderr)
        return EXIT_INTERNAL
    except (PreconditionError, ArithmeticError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_INPUT
    print(json.dumps(report, indent=2, sort_keys=True), file=stdout)
    print(summary, file=stderr)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
