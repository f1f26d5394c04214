"""Print the decomposition of lam (x) mu at several values of delta side by side.

    python3 scripts/tensor_table.py "(2|)" "(1|1)" --deltas t,0,-1,1,-2,3,1/2
"""

from __future__ import annotations

import argparse

from deligne_gl.combinatorics import parse_bipartition
from deligne_gl.deltas import GENERIC, format_delta, parse_delta
from deligne_gl.grothendieck import RingVector, product_at, product_generic


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("lam")
    ap.add_argument("mu")
    ap.add_argument("--deltas", default="t,0,-1,1,-2,2,1/2")
    args = ap.parse_args()
    lam, mu = parse_bipartition(args.lam), parse_bipartition(args.mu)
    for text in args.deltas.split(","):
        d = parse_delta(text.strip())
        x, y = RingVector.basis(lam, d), RingVector.basis(mu, d)
        out = product_generic(x, y) if d is GENERIC else product_at(x, y)
        print(f"delta={format_delta(d):>5}:  {out}")


if __name__ == "__main__":
    main()
