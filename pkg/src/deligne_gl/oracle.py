"""Brute-force verifiers that share as little machinery as possible with the main engine.

* ``lr_oracle``: LR coefficients by expanding Schur polynomials into monomials.
* ``gamma_oracle``: generic tensor products from GL_d characters.
* ``hom_dim_oracle``: Hom dimensions between indecomposables, from primitive
  idempotents found by splitting ``z_lam`` inside a small walled Brauer algebra.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy

from .combinatorics import Bipartition, Partition, bipartitions
from .deltas import GENERIC
from .diagrams import (
    AlgebraElement,
    compose,
    compose_diagrams,
    embed_idempotent,
    enumerate_diagrams,
    w_rs,
    z_idempotent,
)
from .grothendieck import RingVector
from .linalg import nullspace, rank, rref, solve

Vector = list[Fraction]

__all__ = [
    "AlgebraContext",
    "lr_oracle",
    "gamma_oracle",
    "split_idempotents",
    "primitive_idempotent",
    "hom_dim_oracle",
    "direct_hom_dim",
    "bipartitions_up_to",
]


# --- Schur polynomials by monomial expansion -------------------------------


def _horizontal_strips(lam: tuple[int, ...]):
    """Partitions ``mu`` interlacing ``lam`` (so ``lam/mu`` is a horizontal strip)."""
    bounds = [(lam[i + 1] if i + 1 < len(lam) else 0, lam[i]) for i in range(len(lam))]

    def rec(i, acc):
        if i == len(bounds):
            yield tuple(p for p in acc if p)
            return
        lo, hi = bounds[i]
        for v in range(lo, hi + 1):
            acc.append(v)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


@lru_cache(maxsize=None)
def schur_monomials(lam: tuple[int, ...], nvars: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of the Schur polynomial ``s_lam(x_1..x_nvars)``.

    Branching on the last variable: the cells holding ``nvars`` in a
    semistandard tableau form a horizontal strip.
    """
    lam = tuple(p for p in lam if p)
    if len(lam) > nvars:
        return {}
    if nvars == 0:
        return {(): 1}
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for mu in _horizontal_strips(lam):
        if len(mu) > nvars - 1:
            continue
        k = sum(lam) - sum(mu)
        for e, c in schur_monomials(mu, nvars - 1).items():
            out[e + (k,)] += c
    return dict(out)


def _dominant_part(poly: dict) -> dict:
    return {e: c for e, c in poly.items() if all(e[i] >= e[i + 1] for i in range(len(e) - 1))}


def _peel(poly: dict, nvars: int, shift: int = 0) -> dict[tuple[int, ...], int]:
    """Write a symmetric polynomial as a sum of (shifted) Schur polynomials.

    Repeatedly takes the lex-largest dominant monomial, which is the highest
    weight of some summand, and subtracts that Schur polynomial.
    """
    residue = dict(_dominant_part(poly))
    out: dict[tuple[int, ...], int] = {}
    while residue:
        top = max(residue)
        c = residue[top]
        out[top] = c
        shape = tuple(a + shift for a in top)
        if shape and shape[-1] < 0:
            raise AssertionError("residue is not a polynomial character")
        for e, k in _dominant_part(schur_monomials(shape, nvars)).items():
            e = tuple(a - shift for a in e)
            v = residue.get(e, 0) - c * k
            if v:
                residue[e] = v
            else:
                residue.pop(e, None)
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = defaultdict(int)
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _lr_row(lam: Partition, mu: Partition) -> dict[Partition, int]:
    nvars = len(lam) + len(mu)
    prod = _poly_mul(schur_monomials(tuple(lam), nvars), schur_monomials(tuple(mu), nvars))
    return {Partition(e): c for e, c in _peel(prod, nvars).items()}


def lr_oracle(nu, lam, mu) -> int:
    """Coefficient of ``s_nu`` in ``s_lam * s_mu`` from monomial expansions."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if len(lam) + len(mu) == 0:
        return int(not nu)
    return _lr_row(lam, mu).get(nu, 0)


# --- generic products from GL_d characters -----------------------------------


def _weight(lam: Bipartition, d: int) -> tuple[int, ...]:
    if len(lam.black) + len(lam.white) > d:
        raise ValueError(f"{lam} has more than {d} rows in total")
    w = [0] * d
    for i, p in enumerate(lam.black):
        w[i] = p
    for j, p in enumerate(lam.white):
        w[d - 1 - j] = -p
    return tuple(w)


@lru_cache(maxsize=None)
def gl_character(lam: Bipartition, d: int) -> dict[tuple[int, ...], int]:
    """Character of the irreducible rational GL_d module of highest weight ``lam``."""
    w = _weight(lam, d)
    k = lam.white.part(1)
    shifted = schur_monomials(tuple(a + k for a in w), d)
    return {tuple(a - k for a in e): c for e, c in shifted.items()}


def _from_weight(w: tuple[int, ...]) -> Bipartition:
    return Bipartition(Partition(a for a in w if a > 0), Partition(-a for a in reversed(w) if a < 0))


def gamma_oracle(lam, mu, d: int) -> RingVector:
    """Decompose ``V_lam (x) V_mu`` for GL_d and read the result as bipartitions."""
    lam = lam if isinstance(lam, Bipartition) else Bipartition(Partition(lam[0]), Partition(lam[1]))
    mu = mu if isinstance(mu, Bipartition) else Bipartition(Partition(mu[0]), Partition(mu[1]))
    if d < lam.length + mu.length:
        raise ValueError("d must be at least l(lam) + l(mu)")
    prod = _poly_mul(gl_character(lam, d), gl_character(mu, d))
    shift = lam.white.part(1) + mu.white.part(1)
    return RingVector({_from_weight(w): c for w, c in _peel(prod, d, shift).items()}, GENERIC)


# --- walled Brauer algebras as concrete matrices ---------------------------


@dataclass
class AlgebraContext:
    """``B_{r,s}`` at a rational parameter: diagram basis plus multiplication table."""

    r: int
    s: int
    delta: Fraction
    basis: list = field(init=False)
    index: dict = field(init=False)
    table: list = field(init=False, repr=False)

    def __post_init__(self):
        self.delta = Fraction(self.delta)
        w = w_rs(self.r, self.s)
        self.word = w
        self.basis = enumerate_diagrams(w, w)
        self.index = {d: i for i, d in enumerate(self.basis)}
        # table[i][j] = (k, loops) with basis[i] o basis[j] = delta^loops basis[k]
        self.table = []
        for bi in self.basis:
            row = []
            for bj in self.basis:
                d, loops = compose_diagrams(bi, bj)
                row.append((self.index[d], loops))
            self.table.append(row)
        self._powers = [Fraction(1)]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _delta_power(self, k: int) -> Fraction:
        while len(self._powers) <= k:
            self._powers.append(self._powers[-1] * self.delta)
        return self._powers[k]

    def mul(self, a: Vector, b: Vector) -> Vector:
        """``a o b``."""
        out = [Fraction(0)] * self.dim
        for i, x in enumerate(a):
            if not x:
                continue
            row = self.table[i]
            for j, y in enumerate(b):
                if y:
                    k, loops = row[j]
                    out[k] += x * y * self._delta_power(loops)
        return out

    def one(self) -> Vector:
        n = len(self.word)
        ident = next(
            i for i, d in enumerate(self.basis) if all(d.partner[v] == n + v for v in range(n))
        )
        v = [Fraction(0)] * self.dim
        v[ident] = Fraction(1)
        return v

    def vector(self, a: AlgebraElement) -> Vector:
        if a.bottom != self.word or a.top != self.word:
            raise ValueError("element is not in this algebra")
        a = a.specialize(self.delta)
        v = [Fraction(0)] * self.dim
        for d, c in a.terms.items():
            v[self.index[d]] = Fraction(c)
        return v

    def element(self, v: Vector) -> AlgebraElement:
        return AlgebraElement(
            self.word, self.word, {self.basis[i]: c for i, c in enumerate(v) if c}, self.delta
        )

    def full_propagating(self, v: Vector) -> bool:
        n = len(self.word)
        return any(c and self.basis[i].propagating == n for i, c in enumerate(v))


@lru_cache(maxsize=None)
def algebra_context(r: int, s: int, delta: Fraction) -> AlgebraContext:
    return AlgebraContext(r, s, Fraction(delta))


def _add(a: Vector, b: Vector, c: Fraction = Fraction(1)) -> Vector:
    return [x + c * y for x, y in zip(a, b)]


class _Corner:
    """The corner algebra ``eBe`` with coordinates relative to an echelon basis."""

    def __init__(self, ctx: AlgebraContext, e: Vector):
        self.ctx, self.e = ctx, e
        span = [ctx.mul(ctx.mul(e, [Fraction(int(i == j)) for j in range(ctx.dim)]), e) for i in range(ctx.dim)]
        self.basis, self.pivots = rref(span)
        self.dim = len(self.basis)
        self.struct = [[self.coords(ctx.mul(a, b)) for b in self.basis] for a in self.basis]

    def coords(self, v: Vector) -> Vector:
        return [v[p] for p in self.pivots]

    def vector(self, c: Vector) -> Vector:
        out = [Fraction(0)] * self.ctx.dim
        for x, row in zip(c, self.basis):
            if x:
                out = _add(out, row, x)
        return out

    def mul(self, a: Vector, b: Vector) -> Vector:
        out = [Fraction(0)] * self.dim
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out = _add(out, self.struct[i][j], x * y)
        return out

    def trace_form(self) -> list[Vector]:
        traces = [sum((self.struct[k][j][j] for j in range(self.dim)), Fraction(0)) for k in range(self.dim)]
        return [
            [sum((c * t for c, t in zip(self.struct[i][j], traces)), Fraction(0)) for j in range(self.dim)]
            for i in range(self.dim)
        ]

    def unit(self) -> Vector:
        return self.coords(self.e)


def _min_poly_mod(corner: _Corner, quot: list[Vector], a: Vector) -> list[Fraction]:
    """Monic minimal polynomial of ``a`` modulo the radical, lowest coefficient first."""
    project = lambda v: [sum((p * x for p, x in zip(row, v)), Fraction(0)) for row in quot]  # noqa: E731
    powers = [corner.unit()]
    images = [project(powers[0])]
    while True:
        nxt = corner.mul(powers[-1], a)
        img = project(nxt)
        cols = [list(col) for col in zip(*images)]
        sol = solve(cols, img) if cols else None
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
        powers.append(nxt)
        images.append(img)


def _poly_at(corner: _Corner, coeffs, a: Vector) -> Vector:
    acc = [Fraction(0)] * corner.dim
    for c in reversed(coeffs):
        acc = corner.mul(acc, a)
        acc = _add(acc, corner.unit(), Fraction(c))
    return acc


def _proper_factor(coeffs: list[Fraction]):
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x, domain="QQ")
    _, factors = poly.factor_list()
    if len(factors) == 1 and factors[0][1] == 1:
        return None
    g = factors[0][0].monic()
    return [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]


def _candidates(corner: _Corner, rng: random.Random | None, tries: int = 200):
    units = [[Fraction(int(i == j)) for j in range(corner.dim)] for i in range(corner.dim)]
    fixed = units + [corner.mul(a, b) for a in units for b in units]
    if rng is not None:
        rng.shuffle(fixed)
    yield from fixed
    gen = rng or random.Random(0)
    for _ in range(tries):
        yield [Fraction(gen.randint(-3, 3)) for _ in range(corner.dim)]


def _newton_lift(corner: _Corner, f: Vector, limit: int = 64) -> Vector:
    for _ in range(limit):
        f2 = corner.mul(f, f)
        if f2 == f:
            return f
        f3 = corner.mul(f2, f)
        f = [3 * a - 2 * b for a, b in zip(f2, f3)]
    raise AssertionError("idempotent lifting did not converge")


def _is_primitive(corner: _Corner) -> tuple[bool, list[Vector]]:
    form = corner.trace_form()
    quot = rref(form)[0]
    return len(quot) == 1, quot


def _split_once(corner: _Corner, quot: list[Vector], rng) -> Vector:
    """A nontrivial idempotent of the corner algebra, in corner coordinates."""
    project = lambda v: [sum((p * x for p, x in zip(row, v)), Fraction(0)) for row in quot]  # noqa: E731
    for a in _candidates(corner, rng):
        g = _proper_factor(_min_poly_mod(corner, quot, a))
        if g is None:
            continue
        y = _poly_at(corner, g, a)
        # preimage of the right annihilator of y in C/J
        units = [[Fraction(int(i == j)) for j in range(corner.dim)] for i in range(corner.dim)]
        cols = [project(corner.mul(y, u)) for u in units]
        ann = nullspace([list(r) for r in zip(*cols)], corner.dim)
        # f = sum alpha_i ann_i with f * ann_j = ann_j modulo the radical
        rows, rhs = [], []
        for rj in ann:
            prods = [project(corner.mul(ri, rj)) for ri in ann]
            target = project(rj)
            for k in range(len(quot)):
                rows.append([p[k] for p in prods])
                rhs.append(target[k])
        alpha = solve(rows, rhs)
        if alpha is None:
            raise AssertionError("right ideal without a generating idempotent")
        f = [sum((c * r[i] for c, r in zip(alpha, ann)), Fraction(0)) for i in range(corner.dim)]
        return _newton_lift(corner, f)
    raise AssertionError("no splitting element found")


def split_idempotents(ctx: AlgebraContext, z: AlgebraElement, seed: int | None = None) -> list[AlgebraElement]:
    """Mutually orthogonal primitive idempotents summing to ``z``.

    Primitivity of each output ``e`` is certified by ``eBe`` modulo its radical
    being one-dimensional, so ``eBe`` is local.  ``seed`` randomises which
    splitting elements are tried; results agree up to conjugacy.
    """
    v = ctx.vector(z)
    if ctx.mul(v, v) != v:
        raise ValueError("input is not idempotent")
    if not any(v):
        return []
    rng = random.Random(seed) if seed is not None else None
    out: list[Vector] = []
    stack = [v]
    while stack:
        e = stack.pop()
        corner = _Corner(ctx, e)
        primitive, quot = _is_primitive(corner)
        if primitive:
            out.append(e)
            continue
        f = corner.vector(_split_once(corner, quot, rng))
        stack.append(f)
        stack.append(_add(e, f, Fraction(-1)))
    return [ctx.element(e) for e in out]


@lru_cache(maxsize=None)
def primitive_idempotent(lam: Bipartition, delta: Fraction, seed: int | None = None) -> AlgebraElement:
    """The summand of ``z_lam`` that survives the projection to the group algebra."""
    ctx = algebra_context(*lam.size, Fraction(delta))
    parts = split_idempotents(ctx, z_idempotent(lam, ctx.delta), seed)
    keep = [e for e in parts if ctx.full_propagating(ctx.vector(e))]
    if len(keep) != 1:
        raise AssertionError(f"expected exactly one summand with nonzero pi-image, got {len(keep)}")
    return keep[0]


def _span_dim(vectors) -> int:
    vectors = [v for v in vectors if any(v)]
    return rank(vectors) if vectors else 0


def direct_hom_dim(e_lam: AlgebraElement, e_mu: AlgebraElement) -> int:
    """``dim e_mu Hom(w_lam, w_mu) e_lam`` spanned over all walled diagrams."""
    diagrams = enumerate_diagrams(e_lam.top, e_mu.bottom)
    if not diagrams:
        return 0
    index: dict = {}
    vecs = []
    for d in diagrams:
        m = compose(e_mu, compose(AlgebraElement.of(d, 1, e_lam.delta), e_lam))
        vecs.append({index.setdefault(k, len(index)): c for k, c in m.terms.items()})
    width = len(index) or 1
    return _span_dim([[v.get(i, Fraction(0)) for i in range(width)] for v in vecs])


def hom_dim_oracle(lam, mu, delta, seed: int | None = None) -> int:
    """``dim Hom(L(lam), L(mu))`` at a rational parameter, from explicit idempotents."""
    lam = lam if isinstance(lam, Bipartition) else Bipartition(Partition(lam[0]), Partition(lam[1]))
    mu = mu if isinstance(mu, Bipartition) else Bipartition(Partition(mu[0]), Partition(mu[1]))
    delta = Fraction(delta)
    (r, s), (r2, s2) = lam.size, mu.size
    if r + s2 != s + r2:
        return 0
    e_lam = primitive_idempotent(lam, delta, seed)
    e_mu = primitive_idempotent(mu, delta, seed)
    small, big = (lam, mu) if r <= r2 else (mu, lam)
    i = big.size[0] - small.size[0]
    if i and delta == 0 and small.total == 0:
        # the embedding needs 1/delta; fall back to the Hom space itself
        return direct_hom_dim(e_lam, e_mu)
    if small == lam:
        e_lam = embed_idempotent(e_lam, lam, i)
    else:
        e_mu = embed_idempotent(e_mu, mu, i)
    ctx = algebra_context(*big.size, delta)
    a, b = ctx.vector(e_lam), ctx.vector(e_mu)
    units = ([Fraction(int(i == j)) for j in range(ctx.dim)] for i in range(ctx.dim))
    return _span_dim(ctx.mul(ctx.mul(b, u), a) for u in units)


def bipartitions_up_to(max_rank: int):
    """All bipartitions of diagram rank ``r+s <= max_rank``."""
    for n in range(max_rank + 1):
        for r in range(n + 1):
            yield from bipartitions(r, n - r)
