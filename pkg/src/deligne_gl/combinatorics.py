"""Partitions, bipartitions and Littlewood-Richardson coefficients.

Partitions are tuples of positive parts in weakly decreasing order; a
bipartition is a pair ``(black, white)`` of partitions.  Everything else in
the package is indexed by these two types.
"""

from __future__ import annotations

import re
import threading
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Partition",
    "Bipartition",
    "ParseError",
    "EMPTY",
    "EMPTY_BP",
    "transpose",
    "box_moves",
    "partitions",
    "partitions_in_box",
    "bipartitions",
    "contains",
    "lr_coefficient",
    "lr_product",
    "lr_skew",
    "standard_tableaux_count",
    "is_hook",
    "is_cross",
    "is_almost_cross",
    "parse_bipartition",
    "format_bipartition",
    "canonical_key",
]


class ParseError(ValueError):
    """Malformed textual input; ``position`` is the 0-based offending column."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.message = message
        self.position = position

    def __str__(self) -> str:
        return f"{self.message} (at position {self.position})"


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Indexing with :meth:`part` is 1-based and returns 0 past the length, which
    matches the convention ``alpha_i = 0`` for large ``i``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        # trailing zeros are allowed on input and dropped
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        return self[i - 1] if 1 <= i <= len(self) else 0

    def transpose(self) -> Partition:
        return transpose(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


EMPTY = Partition()


class Bipartition(NamedTuple):
    black: Partition
    white: Partition

    @classmethod
    def of(cls, black: Iterable[int] = (), white: Iterable[int] = ()) -> Bipartition:
        return cls(Partition(black), Partition(white))

    @property
    def size(self) -> tuple[int, int]:
        return (sum(self.black), sum(self.white))

    @property
    def total(self) -> int:
        return sum(self.black) + sum(self.white)

    @property
    def length(self) -> int:
        return len(self.black) + len(self.white)

    def dual(self) -> Bipartition:
        return Bipartition(self.white, self.black)

    def __str__(self) -> str:
        return format_bipartition(self)


EMPTY_BP = Bipartition(EMPTY, EMPTY)


def canonical_key(b: Bipartition) -> tuple:
    """Sort key: total size, black size, then both sides lexicographically."""
    return (b.total, sum(b.black), tuple(b.black), tuple(b.white))


def transpose(p: Iterable[int]) -> Partition:
    p = tuple(p)
    if not p:
        return EMPTY
    return Partition(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def box_moves(p: Partition, direction: str) -> set[Partition]:
    """Partitions obtained from ``p`` by adding (``"add"``) or removing one box."""
    p = Partition(p)
    rows = list(p)
    out = set()
    if direction == "add":
        for i in range(len(rows) + 1):
            above = rows[i - 1] if i else None
            cur = rows[i] if i < len(rows) else 0
            if above is None or cur < above:
                new = rows[:]
                if i < len(rows):
                    new[i] += 1
                else:
                    new.append(1)
                out.add(Partition(new))
    elif direction == "remove":
        for i in range(len(rows)):
            below = rows[i + 1] if i + 1 < len(rows) else 0
            if rows[i] > below:
                new = rows[:]
                new[i] -= 1
                out.add(Partition(new))
    else:
        raise ValueError(f"direction must be 'add' or 'remove', got {direction!r}")
    return out


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rem: int, cap: int, acc: list[int]):
        if rem == 0:
            yield Partition(acc)
            return
        for k in range(min(rem, cap), 0, -1):
            acc.append(k)
            yield from rec(rem - k, k, acc)
            acc.pop()

    if n < 0:
        return
    yield from rec(n, max_part, [])


def partitions_in_box(max_size: int) -> Iterator[Partition]:
    for n in range(max_size + 1):
        yield from partitions(n)


def bipartitions(r: int, s: int) -> Iterator[Bipartition]:
    """All bipartitions of size exactly ``(r, s)``."""
    for a in partitions(r):
        for b in partitions(s):
            yield Bipartition(a, b)


def contains(big: Partition, small: Partition) -> bool:
    return len(small) <= len(big) and all(s <= b for s, b in zip(small, big))


# LR coefficients are pure; the shared cache is guarded so threads may share it.
_LR_CACHE: dict[tuple[Partition, Partition, Partition], int] = {}
_LR_LOCK = threading.Lock()


def lr_cache() -> dict[tuple[Partition, Partition, Partition], int]:
    """The live in-memory memo of LR coefficients keyed ``(nu, lam, mu)``."""
    return _LR_CACHE


def _count_lr_tableaux(nu: Partition, lam: Partition, mu: Partition) -> int:
    rows = [(lam.part(i + 1), nu[i]) for i in range(len(nu))]
    cells = []  # reading order: rows top to bottom, each right to left
    for i, (lo, hi) in enumerate(rows):
        for c in range(hi - 1, lo - 1, -1):
            cells.append((i, c))
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        i, c = cells[k]
        hi_bound = len(mu)
        right = filling.get((i, c + 1))
        if right is not None:
            hi_bound = min(hi_bound, right)
        above = filling.get((i - 1, c))
        lo_bound = above + 1 if above is not None else 1
        total = 0
        for v in range(lo_bound, hi_bound + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, c)] = v
            total += rec(k + 1)
            del filling[(i, c)]
            counts[v] -= 1
        return total

    return rec(0)


def lr_coefficient(nu: Partition, lam: Partition, mu: Partition) -> int:
    """Littlewood-Richardson coefficient: multiplicity of ``s_nu`` in ``s_lam * s_mu``.

    Counts semistandard fillings of ``nu/lam`` with content ``mu`` whose
    reverse reading word is a lattice word.
    """
    nu, lam, mu = Partition(nu), Partition(lam), Partition(mu)
    key = (nu, lam, mu)
    hit = _LR_CACHE.get(key)
    if hit is not None:
        return hit
    if sum(nu) != sum(lam) + sum(mu) or not contains(nu, lam) or not contains(nu, mu):
        value = 0
    elif not mu:
        value = 1
    elif not lam:
        value = int(nu == mu)
    else:
        value = _count_lr_tableaux(nu, lam, mu)
    with _LR_LOCK:
        _LR_CACHE[key] = value
    return value


@lru_cache(maxsize=None)
def _containing(lam: Partition, mu: Partition) -> tuple[Partition, ...]:
    n = sum(lam) + sum(mu)
    return tuple(
        nu
        for nu in partitions(n, max_part=(lam.part(1) + mu.part(1)))
        if contains(nu, lam) and contains(nu, mu)
    )


def lr_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Expansion of ``s_lam * s_mu`` in Schur functions."""
    lam, mu = Partition(lam), Partition(mu)
    out = {}
    for nu in _containing(lam, mu):
        c = lr_coefficient(nu, lam, mu)
        if c:
            out[nu] = c
    return out


@lru_cache(maxsize=None)
def _skew_cached(lam: Partition, kappa: Partition) -> tuple[tuple[Partition, int], ...]:
    if not contains(lam, kappa):
        return ()
    n = sum(lam) - sum(kappa)
    out = []
    for alpha in partitions(n, max_part=lam.part(1)):
        if contains(lam, alpha):
            c = lr_coefficient(lam, kappa, alpha)
            if c:
                out.append((alpha, c))
    return tuple(out)


def lr_skew(lam: Partition, kappa: Partition) -> dict[Partition, int]:
    """Expansion of the skew Schur function ``s_{lam/kappa}``."""
    return dict(_skew_cached(Partition(lam), Partition(kappa)))


def standard_tableaux_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook length formula)."""
    p = Partition(p)
    if not p:
        return 1
    t = transpose(p)
    hooks = 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= (row - j - 1) + (t[j] - i - 1) + 1
    return factorial(sum(p)) // hooks


def is_hook(p: Partition, m: int, n: int) -> bool:
    return Partition(p).part(m + 1) <= n


def is_cross(b: Bipartition, m: int, n: int) -> bool:
    return any(b.black.part(k + 1) + b.white.part(m - k + 1) <= n for k in range(m + 1))


def is_almost_cross(b: Bipartition, m: int, n: int) -> bool:
    if len(b.black) > m + 1 or len(b.white) > m + 1:
        return False
    return all(b.black.part(k + 1) + b.white.part(m - k + 1) == n + 1 for k in range(m + 1))


_SIDE = re.compile(r"\s*(\d+\s*(,\s*\d+\s*)*)?\s*")


def _parse_side(text: str, offset: int) -> Partition:
    if not _SIDE.fullmatch(text):
        bad = next((i for i, ch in enumerate(text) if not (ch.isdigit() or ch in ", \t")), 0)
        raise ParseError(f"unexpected character in partition {text!r}", offset + bad)
    parts = [int(x) for x in text.replace(" ", "").split(",") if x]
    if any(p == 0 for p in parts):
        raise ParseError("partition parts must be positive", offset)
    for i in range(1, len(parts)):
        if parts[i] > parts[i - 1]:
            raise ParseError("parts not weakly decreasing", offset + text.find(str(parts[i])))
    return Partition(parts)


def parse_bipartition(text: str) -> Bipartition:
    """Parse ``(a1,...,ak|b1,...,bl)``; either side may be empty."""
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    if not s.startswith("("):
        raise ParseError("bipartition must start with '('", lead)
    if not s.endswith(")"):
        raise ParseError("bipartition must end with ')'", lead + len(s) - 1)
    body = s[1:-1]
    if body.count("|") != 1:
        raise ParseError("bipartition needs exactly one '|'", lead + 1)
    bar = body.index("|")
    black = _parse_side(body[:bar], lead + 1)
    white = _parse_side(body[bar + 1 :], lead + 2 + bar)
    return Bipartition(black, white)


def format_bipartition(b: Bipartition) -> str:
    return "(" + ",".join(map(str, b.black)) + "|" + ",".join(map(str, b.white)) + ")"


def multinomial_f(lam: Partition, mu: Partition) -> int:
    """``f(lam) f(mu) C(|lam|+|mu|, |lam|)``: SYT count of the product."""
    a, b = sum(lam), sum(mu)
    return standard_tableaux_count(lam) * standard_tableaux_count(mu) * comb(a + b, a)
