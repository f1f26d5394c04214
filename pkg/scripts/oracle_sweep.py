"""Compare Hom dimensions from explicit idempotents with the cap-diagram form.

Rank 3 is what the test suite covers; rank 4 takes under a minute.

    python3 scripts/oracle_sweep.py --rank 4 --seed 7
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from deligne_gl.grothendieck import bilinear_form
from deligne_gl.oracle import bipartitions_up_to, hom_dim_oracle

DELTAS = [Fraction(-2), Fraction(-1), Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=3)
    ap.add_argument("--seed", type=int, default=None, help="randomise idempotent splitting")
    args = ap.parse_args()
    pool = list(bipartitions_up_to(args.rank))
    for d in DELTAS:
        start = time.perf_counter()
        agree = total = 0
        for lam in pool:
            for mu in pool:
                total += 1
                a, b = hom_dim_oracle(lam, mu, d, seed=args.seed), bilinear_form(lam, mu, d)
                if a == b:
                    agree += 1
                else:
                    print(f"  disagree at delta={d}: {lam} {mu} oracle={a} form={b}")
        print(f"delta={str(d):>4}: {agree}/{total} agree ({time.perf_counter() - start:.1f} s)")


if __name__ == "__main__":
    main()
