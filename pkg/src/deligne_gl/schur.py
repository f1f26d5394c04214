"""Characters and dimensions of the summands ``W(lam)`` of mixed tensor powers for gl(m|n)."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Mapping, Sequence, TypeVar

from .capdiagrams import linked_set
from .combinatorics import Bipartition, Partition

Exponent = tuple[int, ...]
R = TypeVar("R")

__all__ = [
    "LaurentPolynomial",
    "complete_susy",
    "composite_schur",
    "character",
    "edeg",
    "dim_entry",
    "dim_composite",
    "dim_W",
]


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial in ``x_1..x_m, y_1..y_n``; exponents stored densely."""

    m: int
    n: int
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        width = self.m + self.n
        clean = {}
        for e, c in self.terms.items():
            if len(e) != width:
                raise ValueError(f"exponent {e} has wrong length for ({self.m}|{self.n})")
            if c:
                clean[tuple(e)] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, c: int, m: int, n: int) -> LaurentPolynomial:
        return cls(m, n, {(0,) * (m + n): c})

    @classmethod
    def variable(cls, name: str, m: int, n: int) -> LaurentPolynomial:
        """``variable('x', ...)`` is not valid; use ``'x1'``, ``'y2'`` and so on."""
        kind, idx = name[0], int(name[1:])
        pos = idx - 1 if kind == "x" else m + idx - 1
        e = [0] * (m + n)
        e[pos] = 1
        return cls(m, n, {tuple(e): 1})

    def _same(self, other: LaurentPolynomial):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("variable counts differ")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.m, self.n)
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(self.m, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.m, self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial(self.m, self.n, {e: c * other for e, c in self.terms.items()})
        self._same(other)
        out: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPolynomial(self.m, self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.m, self.n)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def bar(self) -> LaurentPolynomial:
        return LaurentPolynomial(
            self.m, self.n, {tuple(-a for a in e): c for e, c in self.terms.items()}
        )

    def at_ones(self) -> int:
        return sum(self.terms.values())

    def ordered_terms(self) -> list[tuple[Exponent, int]]:
        """Graded-lex order: total degree descending, then exponent vectors descending."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def _names(self) -> list[str]:
        return [f"x{i + 1}" for i in range(self.m)] + [f"y{j + 1}" for j in range(self.n)]

    def monomial_text(self, e: Exponent) -> str:
        parts = [f"{v}^{a}" for v, a in zip(self._names(), e) if a]
        return " ".join(parts) if parts else "1"

    def lines(self) -> list[str]:
        return [f"{c} * {self.monomial_text(e)}" for e, c in self.ordered_terms()]

    def __str__(self):
        return "\n".join(self.lines()) if self.terms else "0"

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coeff": c} for e, c in self.ordered_terms()]


def _det(matrix: Sequence[Sequence[R]], zero: R, one: R) -> R:
    """Laplace expansion down the rows, memoised on the set of unused columns."""
    size = len(matrix)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset[int]) -> R:
        if row == size:
            return one
        total = zero
        for sign_idx, c in enumerate(sorted(cols)):
            entry = matrix[row][c]
            if not entry:
                continue
            term = entry * minor(row + 1, cols - {c})
            total = total + term if sign_idx % 2 == 0 else total - term
        return total

    return minor(0, frozenset(range(size)))


def _complete_homogeneous(k: int, count: int, offset: int, width: int) -> dict[Exponent, int]:
    out = {}
    for combo in itertools.combinations_with_replacement(range(count), k):
        e = [0] * width
        for v in combo:
            e[offset + v] += 1
        out[tuple(e)] = 1
    return out


def _elementary(k: int, count: int, offset: int, width: int) -> dict[Exponent, int]:
    out = {}
    for combo in itertools.combinations(range(count), k):
        e = [0] * width
        for v in combo:
            e[offset + v] = 1
        out[tuple(e)] = 1
    return out


@lru_cache(maxsize=None)
def complete_susy(k: int, m: int, n: int) -> LaurentPolynomial:
    """``h_k(x|y) = sum_i h_{k-i}(x) e_i(y)``."""
    width = m + n
    if k < 0:
        return LaurentPolynomial(m, n)
    total = LaurentPolynomial(m, n)
    for i in range(min(k, n) + 1):
        if m == 0 and k - i > 0:
            continue
        hx = LaurentPolynomial(m, n, _complete_homogeneous(k - i, m, 0, width))
        ey = LaurentPolynomial(m, n, _elementary(i, n, m, width))
        total = total + hx * ey
    return total


@lru_cache(maxsize=None)
def complete_susy_bar(k: int, m: int, n: int) -> LaurentPolynomial:
    return complete_susy(k, m, n).bar()


def _composite_matrix(lam: Bipartition, p: int, q: int, h: Callable, hbar: Callable) -> list[list]:
    black, white = lam.black, lam.white
    size = p + q
    rows = []
    for i in range(1, size + 1):
        row = [hbar(white.part(q + 1 - j) + j - i) for j in range(1, q + 1)]
        row += [h(black.part(k) + i - (q + k)) for k in range(1, p + 1)]
        rows.append(row)
    return rows


def _resolve_pq(lam: Bipartition, p: int | None, q: int | None) -> tuple[int, int]:
    p = len(lam.black) if p is None else p
    q = len(lam.white) if q is None else q
    if p < len(lam.black) or q < len(lam.white):
        raise ValueError("p and q must be at least the lengths of the two partitions")
    return p, q


def _as_bp(lam) -> Bipartition:
    return lam if isinstance(lam, Bipartition) else Bipartition(Partition(lam[0]), Partition(lam[1]))


def composite_schur(lam, m: int, n: int, p: int | None = None, q: int | None = None) -> LaurentPolynomial:
    """The composite supersymmetric Schur polynomial, as a block determinant of ``h`` and ``h-bar``.

    ``p`` and ``q`` default to the lengths of the black and white partitions;
    any larger values give the same polynomial.
    """
    lam = _as_bp(lam)
    p, q = _resolve_pq(lam, p, q)
    return _composite_schur(lam, m, n, p, q)


@lru_cache(maxsize=None)
def _composite_schur(lam: Bipartition, m: int, n: int, p: int, q: int) -> LaurentPolynomial:
    mat = _composite_matrix(
        lam, p, q, lambda k: complete_susy(k, m, n), lambda k: complete_susy_bar(k, m, n)
    )
    return _det(mat, LaurentPolynomial(m, n), LaurentPolynomial.constant(1, m, n))


def character(lam, m: int, n: int) -> LaurentPolynomial:
    lam = _as_bp(lam)
    total = LaurentPolynomial(m, n)
    for mu in sorted(linked_set(lam, m - n)):
        total = total + composite_schur(mu, m, n)
    return total


def edeg(f: LaurentPolynomial) -> int:
    """Largest total degree reachable after inverting any subset of the variables."""
    if not f:
        raise ValueError("edeg of the zero polynomial is undefined")
    best = None
    for signs in itertools.product((1, -1), repeat=f.m + f.n):
        d = max(sum(s * a for s, a in zip(signs, e)) for e in f.terms)
        best = d if best is None else max(best, d)
    return best


def dim_entry(k: int, m: int, n: int) -> int:
    if k < 0:
        return 0
    if m == 0:
        return comb(n, k)
    return sum(comb(m + k - i - 1, m - 1) * comb(n, i) for i in range(k + 1))


def dim_composite(lam, m: int, n: int, p: int | None = None, q: int | None = None) -> int:
    lam = _as_bp(lam)
    p, q = _resolve_pq(lam, p, q)
    d = lambda k: dim_entry(k, m, n)  # noqa: E731
    return _det(_composite_matrix(lam, p, q, d, d), 0, 1)


def dim_W(lam, m: int, n: int) -> int:
    lam = _as_bp(lam)
    total = sum(dim_composite(mu, m, n) for mu in linked_set(lam, m - n))
    if total < 0:
        raise AssertionError(f"negative dimension {total} for W{lam} at ({m}|{n})")
    return total
