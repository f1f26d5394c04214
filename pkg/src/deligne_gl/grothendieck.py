"""The split Grothendieck rings ``R_t`` (generic) and ``R_delta`` on the bipartition basis.

Products in ``R_t`` come from Koike's formula.  For a fixed ``delta`` the ring
is transported through the lifting map, which is unitriangular, so products at
``delta`` are computed as ``lift^{-1}(lift(x) * lift(y))``.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .capdiagrams import linked_set
from .combinatorics import (
    EMPTY_BP,
    Bipartition,
    Partition,
    box_moves,
    canonical_key,
    contains,
    lr_coefficient,
    lr_product,
    lr_skew,
    partitions,
)
from .deltas import GENERIC, Generic, as_delta, format_delta, integral_value, parse_delta

SCHEMA = "deligne-gl/1"

__all__ = [
    "RingVector",
    "koike_gamma",
    "product_generic",
    "pieri",
    "mixed_product",
    "lift",
    "unlift",
    "product_at",
    "bilinear_form",
    "dual_vector",
]


def _bp(x) -> Bipartition:
    if isinstance(x, Bipartition):
        return x
    return Bipartition(Partition(x[0]), Partition(x[1]))


@dataclass(frozen=True)
class RingVector:
    """Finite integer combination of bipartitions, tagged by its ring."""

    terms: Mapping[Bipartition, int] = field(default_factory=dict)
    ring: Fraction | Generic = GENERIC

    def __post_init__(self):
        clean: dict[Bipartition, int] = {}
        for k, v in self.terms.items():
            if v:
                clean[_bp(k)] = int(v)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "ring", as_delta(self.ring))

    @classmethod
    def basis(cls, lam, ring=GENERIC) -> RingVector:
        return cls({_bp(lam): 1}, ring)

    @property
    def generic(self) -> bool:
        return isinstance(self.ring, Generic)

    def items(self) -> list[tuple[Bipartition, int]]:
        return sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))

    def coeff(self, lam) -> int:
        return self.terms.get(_bp(lam), 0)

    def _check(self, other: RingVector):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {format_delta(self.ring)} vs {format_delta(other.ring)}")

    def __add__(self, other: RingVector) -> RingVector:
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return RingVector(out, self.ring)

    def __neg__(self) -> RingVector:
        return RingVector({k: -v for k, v in self.terms.items()}, self.ring)

    def __sub__(self, other: RingVector) -> RingVector:
        return self + (-other)

    def __rmul__(self, c: int) -> RingVector:
        return RingVector({k: c * v for k, v in self.terms.items()}, self.ring)

    def __mul__(self, other: RingVector) -> RingVector:
        if self.generic:
            return product_generic(self, other)
        return product_at(self, other)

    def __eq__(self, other):
        if not isinstance(other, RingVector):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{lam}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def to_json(self) -> dict:
        out: dict = {"schema": SCHEMA, "ring": "t" if self.generic else "delta"}
        if not self.generic:
            out["delta"] = format_delta(self.ring)
        out["terms"] = [
            {"bp": [list(lam.black), list(lam.white)], "coeff": c} for lam, c in self.items()
        ]
        return out

    @classmethod
    def from_json(cls, data: dict) -> RingVector:
        ring = GENERIC if data["ring"] == "t" else parse_delta(str(data["delta"]))
        return cls({_bp(t["bp"]): t["coeff"] for t in data["terms"]}, ring)


def _sub_partitions(lam: Partition) -> Iterable[Partition]:
    for n in range(sum(lam) + 1):
        for k in partitions(n, max_part=lam.part(1)):
            if contains(lam, k):
                yield k


def koike_gamma(lam, mu, nu) -> int:
    """Coefficient of ``nu`` in ``lam * mu`` in the generic ring, by direct summation."""
    lam, mu, nu = _bp(lam), _bp(mu), _bp(nu)
    r, s = lam.size
    r2, s2 = mu.size
    if nu.size[0] > r + r2 or nu.size[1] > s + s2:
        return 0
    total = 0
    # |alpha| + |theta| = |nu.black| and |beta| + |eta| = |nu.white|
    for kappa in _sub_partitions(lam.black):
        if not contains(mu.white, kappa):
            continue
        k = sum(kappa)
        for alpha in partitions(r - k):
            a1 = lr_coefficient(lam.black, kappa, alpha)
            if not a1:
                continue
            for beta in partitions(s2 - k):
                b1 = lr_coefficient(mu.white, kappa, beta)
                if not b1:
                    continue
                for gamma in _sub_partitions(lam.white):
                    if not contains(mu.black, gamma):
                        continue
                    g = sum(gamma)
                    if (r - k) + (r2 - g) != nu.size[0] or (s2 - k) + (s - g) != nu.size[1]:
                        continue
                    for eta in partitions(s - g):
                        e1 = lr_coefficient(lam.white, gamma, eta)
                        if not e1:
                            continue
                        c_white = lr_coefficient(nu.white, beta, eta)
                        if not c_white:
                            continue
                        for theta in partitions(r2 - g):
                            t1 = lr_coefficient(mu.black, gamma, theta)
                            if not t1:
                                continue
                            c_black = lr_coefficient(nu.black, alpha, theta)
                            total += a1 * b1 * e1 * t1 * c_black * c_white
    return total


@lru_cache(maxsize=None)
def _basis_product(lam: Bipartition, mu: Bipartition) -> tuple[tuple[Bipartition, int], ...]:
    # same sum as koike_gamma, grouped so every nu is produced at once
    acc: dict[Bipartition, int] = defaultdict(int)
    for kappa in _sub_partitions(lam.black):
        if not contains(mu.white, kappa):
            continue
        alphas = lr_skew(lam.black, kappa)
        betas = lr_skew(mu.white, kappa)
        for gamma in _sub_partitions(lam.white):
            if not contains(mu.black, gamma):
                continue
            etas = lr_skew(lam.white, gamma)
            thetas = lr_skew(mu.black, gamma)
            for alpha, a in alphas.items():
                for theta, t in thetas.items():
                    blacks = lr_product(alpha, theta)
                    for beta, b in betas.items():
                        for eta, e in etas.items():
                            whites = lr_product(beta, eta)
                            w = a * t * b * e
                            for nb, cb in blacks.items():
                                for nw, cw in whites.items():
                                    acc[Bipartition(nb, nw)] += w * cb * cw
    return tuple(sorted(((k, v) for k, v in acc.items() if v), key=lambda kv: canonical_key(kv[0])))


def product_generic(x: RingVector, y: RingVector, threads: int = 1) -> RingVector:
    """Bilinear extension of Koike's product in ``R_t``."""
    if not (x.generic and y.generic):
        raise ValueError("product_generic needs two vectors of the generic ring")
    pairs = [(a, ca, b, cb) for a, ca in x.items() for b, cb in y.items()]

    def one(p):
        a, ca, b, cb = p
        return [(nu, ca * cb * g) for nu, g in _basis_product(a, b)]

    if threads > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(threads) as pool:
            chunks = list(pool.map(one, pairs))
    else:
        chunks = [one(p) for p in pairs]
    out: dict[Bipartition, int] = defaultdict(int)
    for chunk in chunks:
        for nu, c in chunk:
            out[nu] += c
    return RingVector(out, GENERIC)


def pieri(lam, color: str) -> RingVector:
    """``lam * (box, 0)`` for ``color='black'`` or ``lam * (0, box)`` for ``'white'``."""
    lam = _bp(lam)
    if color not in ("black", "white"):
        raise ValueError("color must be 'black' or 'white'")
    out: dict[Bipartition, int] = defaultdict(int)
    if color == "black":
        for p in box_moves(lam.black, "add"):
            out[Bipartition(p, lam.white)] += 1
        for p in box_moves(lam.white, "remove"):
            out[Bipartition(lam.black, p)] += 1
    else:
        for p in box_moves(lam.white, "add"):
            out[Bipartition(lam.black, p)] += 1
        for p in box_moves(lam.black, "remove"):
            out[Bipartition(p, lam.white)] += 1
    return RingVector(out, GENERIC)


def mixed_product(black_only, white_only) -> RingVector:
    """``(lam, 0) * (0, mu)``: a sum over the common part ``kappa`` removed from both."""
    lam, mu = Partition(black_only), Partition(white_only)
    out: dict[Bipartition, int] = defaultdict(int)
    for kappa in _sub_partitions(lam):
        if not contains(mu, kappa):
            continue
        for nb, a in lr_skew(lam, kappa).items():
            for nw, b in lr_skew(mu, kappa).items():
                out[Bipartition(nb, nw)] += a * b
    return RingVector(out, GENERIC)


def lift(x: RingVector) -> RingVector:
    """``lam -> sum of mu linked to lam``, from ``R_delta`` to ``R_t``."""
    if x.generic:
        raise ValueError("lift expects a vector of R_delta")
    out: dict[Bipartition, int] = defaultdict(int)
    for lam, c in x.items():
        for mu in linked_set(lam, x.ring):
            out[mu] += c
    return RingVector(out, GENERIC)


def unlift(x: RingVector, delta) -> RingVector:
    """Preimage under ``lift`` by back-substitution from the largest bipartitions down."""
    if not x.generic:
        raise ValueError("unlift expects a vector of R_t")
    delta = as_delta(delta)
    if isinstance(delta, Generic):
        raise ValueError("unlift needs a specific delta")
    residue = dict(x.terms)
    out: dict[Bipartition, int] = {}
    while residue:
        # the largest remaining term cannot appear in the lift of anything smaller
        lam = max(residue, key=canonical_key)
        c = residue[lam]
        out[lam] = c
        for mu in linked_set(lam, delta):
            v = residue.get(mu, 0) - c
            if v:
                residue[mu] = v
            else:
                residue.pop(mu, None)
        if lam in residue:
            raise AssertionError(f"lift of {lam} does not contain {lam} exactly once")
    return RingVector(out, delta)


def product_at(x: RingVector, y: RingVector, threads: int = 1) -> RingVector:
    """Tensor product of indecomposables at a fixed ``delta``."""
    x._check(y)
    if x.generic:
        raise ValueError("product_at expects vectors of R_delta; use product_generic")
    prod = product_generic(lift(x), lift(y), threads=threads)
    out = unlift(prod, x.ring)
    if all(c >= 0 for c in x.terms.values()) and all(c >= 0 for c in y.terms.values()):
        if any(c < 0 for c in out.terms.values()):
            raise AssertionError(f"negative multiplicity in {out}")
    return out


def bilinear_form(lam, mu, delta) -> int:
    """``dim Hom(L(lam), L(mu))``: the number of bipartitions linked to both."""
    lam, mu = _bp(lam), _bp(mu)
    delta = as_delta(delta)
    if integral_value(delta) is None:
        return int(lam == mu)
    return len(linked_set(lam, delta) & linked_set(mu, delta))


def form(x: RingVector, y: RingVector) -> int:
    """Bilinear extension of :func:`bilinear_form` to vectors of one ring."""
    x._check(y)
    return sum(
        a * b * bilinear_form(l, m, x.ring) for l, a in x.terms.items() for m, b in y.terms.items()
    )


def dual_vector(x: RingVector) -> RingVector:
    return RingVector({lam.dual(): c for lam, c in x.terms.items()}, x.ring)


def unit(ring=GENERIC) -> RingVector:
    return RingVector.basis(EMPTY_BP, ring)
