"""Tabulate which W(lam) vanish for gl(m|n) and compare with the cross condition.

    python3 scripts/vanishing_sweep.py --max 3
"""

from __future__ import annotations

import argparse

from deligne_gl.combinatorics import bipartitions, format_bipartition, is_almost_cross, is_cross
from deligne_gl.schur import dim_W

PAIRS = [(0, 1), (1, 1), (1, 2), (2, 1), (2, 0), (2, 2)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=3, help="bound on |black| and |white|")
    args = ap.parse_args()
    print(f"{'(m|n)':<7}{'total':>7}{'nonzero':>9}{'almost':>8}{'mismatch':>10}")
    for m, n in PAIRS:
        total = nonzero = almost = bad = 0
        for r in range(args.max + 1):
            for s in range(args.max + 1):
                for lam in bipartitions(r, s):
                    total += 1
                    dim = dim_W(lam, m, n)
                    nonzero += dim > 0
                    almost += is_almost_cross(lam, m, n)
                    if (dim > 0) != is_cross(lam, m, n):
                        bad += 1
                        print(f"  mismatch: {format_bipartition(lam)} dim={dim}")
        print(f"({m}|{n})  {total:>7}{nonzero:>9}{almost:>8}{bad:>10}")


if __name__ == "__main__":
    main()
