"""Randomized sweep comparing the certificate-based decisions with the enumeration oracle.

Writes one JSON line per case (optional) and prints agreement counts.
"""

from __future__ import annotations

import argparse
import json
import random
import time
from dataclasses import asdict, dataclass

from matdiv.adequacy import adequate_part, theorem2_check
from matdiv.divisors import left_divides_direct, left_divides_structural, leftgcd_snf
from matdiv.document import encode_matrix
from matdiv.oracle import definition_check, leftgcd_oracle, theorem2_oracle
from matdiv.ring import ZZ
from matdiv.sampling import random_matrix


@dataclass
class SweepConfig:
    seed: int = 0
    cases: int = 500
    entry_bound: int = 20
    det_bound_S: int = 200
    det_bound_A: int = 600
    det_bound_B: int = 2000
    out: str | None = None


def sweep(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    counts = {"leftgcd": 0, "divides": 0, "theorem2": 0, "adequacy": 0, "adequacy_nontrivial": 0}
    rows = []
    for i in range(cfg.cases):
        A = random_matrix(ZZ, rng, bound=cfg.entry_bound)
        B = random_matrix(ZZ, rng, bound=cfg.entry_bound)
        counts["leftgcd"] += leftgcd_snf(A, B) == leftgcd_oracle(A, B).snf_diagonal()
        counts["divides"] += (left_divides_direct(B, A) is not None) == left_divides_structural(B, A)

        S = random_matrix(ZZ, rng, bound=15, det_bound=cfg.det_bound_S)
        A2 = S @ random_matrix(ZZ, rng, bound=3) if i % 2 else random_matrix(ZZ, rng, bound=25, det_bound=cfg.det_bound_A)
        if abs(A2.det()) > cfg.det_bound_A:
            A2 = random_matrix(ZZ, rng, bound=25, det_bound=cfg.det_bound_A)
        t2, t2_oracle = theorem2_check(A2, S)[0], theorem2_oracle(A2, S)
        counts["theorem2"] += t2 == t2_oracle

        D = random_matrix(ZZ, rng, bound=5)
        A3, B3 = D @ random_matrix(ZZ, rng, bound=8), D @ random_matrix(ZZ, rng, bound=8)
        while abs(B3.det()) > cfg.det_bound_B:
            B3 = D @ random_matrix(ZZ, rng, bound=8)
        res = adequate_part(B3, A3)
        if res.trivial_flag:
            ok = leftgcd_oracle(A3, B3).is_unimodular()
        else:
            counts["adequacy_nontrivial"] += 1
            ok = definition_check(B3, res.S, res.T, A3, exhaustive=False, bound=10**7) == (True, True)
        counts["adequacy"] += ok
        if cfg.out:
            rows.append({"A": encode_matrix(A3), "B": encode_matrix(B3), "S": encode_matrix(res.S), "ok": ok})
    if cfg.out:
        with open(cfg.out, "w") as fh:
            for r in rows:
                fh.write(json.dumps(r, sort_keys=True) + "\n")
    return counts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in asdict(SweepConfig()).items():
        kind = int if isinstance(default, int) else str
        ap.add_argument(f"--{name.replace('_', '-')}", type=kind, default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    t0 = time.perf_counter()
    counts = sweep(cfg)
    dt = time.perf_counter() - t0
    for key, val in counts.items():
        print(f"{key:>20}: {val}/{cfg.cases}" if key != "adequacy_nontrivial" else f"{key:>20}: {val}")
    print(f"{'seconds':>20}: {dt:.1f}")


if __name__ == "__main__":
    main()
