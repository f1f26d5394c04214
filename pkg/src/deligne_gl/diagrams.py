"""Walled Brauer diagrams, their composition, and the structure morphisms.

Words are strings over ``"b"`` (black) and ``"w"`` (white).  A diagram with
``n`` bottom and ``m`` top vertices numbers the bottom row ``0..n-1`` and the
top row ``n..n+m-1`` (both left to right) and stores the perfect matching as
an involution ``partner``.  Composition ``compose(Y, X)`` means "first X, then
Y": X sits at the bottom and Y is stacked on top.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator

from .combinatorics import Bipartition, Partition, transpose
from .scalars import RationalFunction, specialize

__all__ = [
    "BLACK",
    "WHITE",
    "w_rs",
    "dual_word",
    "WalledDiagram",
    "AlgebraElement",
    "enumerate_diagrams",
    "compose_diagrams",
    "tensor_diagrams",
    "compose",
    "tensor",
    "tensor_all",
    "identity",
    "braiding",
    "ev",
    "coev",
    "psi",
    "psihat",
    "phi",
    "phihat",
    "permutation_diagram",
    "young_symmetrizer",
    "z_idempotent",
    "pi_projection",
    "flip",
    "embed_idempotent",
]

BLACK, WHITE = "b", "w"


def w_rs(r: int, s: int) -> str:
    return BLACK * r + WHITE * s


def dual_word(w: str) -> str:
    return w.translate(str.maketrans("bw", "wb"))


def _check_word(w: str) -> str:
    if any(ch not in "bw" for ch in w):
        raise ValueError(f"words are strings over 'b' and 'w', got {w!r}")
    return w


@dataclass(frozen=True)
class WalledDiagram:
    bottom: str
    top: str
    partner: tuple[int, ...]

    def __post_init__(self):
        _check_word(self.bottom)
        _check_word(self.top)
        n, total = len(self.bottom), len(self.bottom) + len(self.top)
        if len(self.partner) != total:
            raise ValueError("partner must cover every vertex")
        for v, p in enumerate(self.partner):
            if not 0 <= p < total or p == v or self.partner[p] != v:
                raise ValueError(f"not a perfect matching: {self.partner}")
            same_row = (v < n) == (p < n)
            mixed = self.color(v) != self.color(p)
            if same_row != mixed:
                raise ValueError("edge colour rule violated")

    def color(self, v: int) -> str:
        n = len(self.bottom)
        return self.bottom[v] if v < n else self.top[v - n]

    def vertex(self, v: int) -> tuple[int, int]:
        """``(row, index)`` with row 0 = bottom, row 1 = top."""
        n = len(self.bottom)
        return (0, v) if v < n else (1, v - n)

    @property
    def edges(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Canonically sorted vertex pairs."""
        return sorted(
            (self.vertex(v), self.vertex(p)) for v, p in enumerate(self.partner) if v < p
        )

    @property
    def propagating(self) -> int:
        n = len(self.bottom)
        return sum(1 for v in range(n) if self.partner[v] >= n)

    def to_json(self) -> dict:
        return {
            "bottom": self.bottom,
            "top": self.top,
            "edges": [[list(a), list(b)] for a, b in self.edges],
        }

    @classmethod
    def from_edges(cls, bottom: str, top: str, edges: Iterable) -> WalledDiagram:
        n = len(bottom)
        partner = [-1] * (n + len(top))

        def vid(rv):
            row, idx = rv
            return idx if row == 0 else n + idx

        for a, b in edges:
            va, vb = vid(a), vid(b)
            partner[va], partner[vb] = vb, va
        return cls(bottom, top, tuple(partner))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def enumerate_diagrams(bottom: str, top: str) -> list[WalledDiagram]:
    """All ``(bottom, top)``-diagrams; there are ``(r+s')!`` when any exist."""
    n = len(bottom)
    # Swap top colours: then every edge joins an effective black to an effective white.
    eff = list(bottom) + [WHITE if c == BLACK else BLACK for c in top]
    blacks = [v for v, c in enumerate(eff) if c == BLACK]
    whites = [v for v, c in enumerate(eff) if c == WHITE]
    if len(blacks) != len(whites):
        return []
    out = []
    for perm in itertools.permutations(whites):
        partner = [0] * len(eff)
        for b, w in zip(blacks, perm):
            partner[b], partner[w] = w, b
        out.append(WalledDiagram(bottom, top, tuple(partner)))
    assert len(out) == factorial(len(blacks)) and n + len(top) == 2 * len(blacks)
    return out


def compose_diagrams(y: WalledDiagram, x: WalledDiagram) -> tuple[WalledDiagram, int]:
    """Stack ``y`` on ``x``; return the reduced diagram and the number of closed loops."""
    if x.top != y.bottom:
        raise ValueError(f"cannot compose: {x.top!r} != {y.bottom!r}")
    n, m, k = len(x.bottom), len(x.top), len(y.top)
    seen_mid = [False] * m
    partner = [-1] * (n + k)

    def walk_from_x(v: int) -> int:
        # v is an X vertex id; follow edges until an outer vertex is reached
        while True:
            p = x.partner[v]
            if p < n:
                return p
            mid = p - n
            seen_mid[mid] = True
            q = y.partner[mid]
            if q >= m:
                return n + (q - m)
            seen_mid[q] = True
            v = n + q

    def walk_from_y(v: int) -> int:
        while True:
            p = y.partner[v]
            if p >= m:
                return n + (p - m)
            seen_mid[p] = True
            q = x.partner[n + p]
            if q < n:
                return q
            seen_mid[q - n] = True
            v = q - n

    for i in range(n):
        if partner[i] < 0:
            j = walk_from_x(i)
            partner[i], partner[j] = j, i
    for j in range(k):
        if partner[n + j] < 0:
            i = walk_from_y(m + j)
            partner[n + j], partner[i] = i, n + j
    loops = 0
    for start in range(m):
        if seen_mid[start]:
            continue
        loops += 1
        v = start
        while not seen_mid[v]:
            seen_mid[v] = True
            u = x.partner[n + v] - n  # middle vertices only: loops never touch outer rows
            seen_mid[u] = True
            v = y.partner[u]
    return WalledDiagram(x.bottom, y.top, tuple(partner)), loops


def tensor_diagrams(x1: WalledDiagram, x2: WalledDiagram) -> WalledDiagram:
    """Place ``x1`` directly to the left of ``x2``."""
    n1, n2 = len(x1.bottom), len(x2.bottom)
    m1 = len(x1.top)
    nb = n1 + n2

    def map1(v):
        return v if v < n1 else nb + (v - n1)

    def map2(v):
        return n1 + v if v < n2 else nb + m1 + (v - n2)

    partner = [0] * (nb + m1 + len(x2.top))
    for v, p in enumerate(x1.partner):
        partner[map1(v)] = map1(p)
    for v, p in enumerate(x2.partner):
        partner[map2(v)] = map2(p)
    return WalledDiagram(x1.bottom + x2.bottom, x1.top + x2.top, tuple(partner))


def _prune(terms: dict) -> dict:
    return {d: c for d, c in terms.items() if c != 0}


@dataclass(frozen=True)
class AlgebraElement:
    """A finite linear combination of ``(bottom, top)``-diagrams.

    ``delta`` is ``None`` for the generic parameter ``t`` (coefficients are
    :class:`RationalFunction`), otherwise the rational value loops evaluate to.
    """

    bottom: str
    top: str
    terms: dict = field(default_factory=dict, compare=False, hash=False)
    delta: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "terms", _prune(self.terms))
        if self.delta is not None:
            object.__setattr__(self, "delta", Fraction(self.delta))
        for d in self.terms:
            if d.bottom != self.bottom or d.top != self.top:
                raise ValueError("diagram does not match element context")

    @classmethod
    def of(cls, diagram: WalledDiagram, coeff=1, delta=None) -> AlgebraElement:
        c = RationalFunction.const(coeff) if delta is None else Fraction(coeff)
        return cls(diagram.bottom, diagram.top, {diagram: c}, delta)

    @classmethod
    def zero(cls, bottom: str, top: str, delta=None) -> AlgebraElement:
        return cls(bottom, top, {}, delta)

    def _same(self, other: AlgebraElement):
        if (self.bottom, self.top, self.delta) != (other.bottom, other.top, other.delta):
            raise ValueError("algebra elements live in different spaces")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._same(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, 0) + c
        return AlgebraElement(self.bottom, self.top, terms, self.delta)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.bottom, self.top, {d: -c for d, c in self.terms.items()}, self.delta)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __rmul__(self, scalar) -> AlgebraElement:
        return AlgebraElement(
            self.bottom, self.top, {d: scalar * c for d, c in self.terms.items()}, self.delta
        )

    def __matmul__(self, other: AlgebraElement) -> AlgebraElement:
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.bottom, self.top, self.delta) == (other.bottom, other.top, other.delta) and (
            self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.bottom, self.top, self.delta, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def specialize(self, delta) -> AlgebraElement:
        if self.delta is not None:
            if Fraction(delta) != self.delta:
                raise ValueError("element already specialised at a different value")
            return self
        delta = Fraction(delta)
        return AlgebraElement(
            self.bottom, self.top, {d: specialize(c, delta) for d, c in self.terms.items()}, delta
        )

    def __repr__(self):
        tag = "t" if self.delta is None else str(self.delta)
        return f"AlgebraElement({self.bottom!r}->{self.top!r}, {len(self.terms)} terms, delta={tag})"


def _loop_scalar(loops: int, delta):
    if delta is None:
        return RationalFunction.t_power(loops)
    return Fraction(delta) ** loops


def compose(y: AlgebraElement, x: AlgebraElement) -> AlgebraElement:
    """Bilinear composition ``y o x`` with one factor of the parameter per loop."""
    if x.top != y.bottom:
        raise ValueError(f"cannot compose: {x.top!r} != {y.bottom!r}")
    if x.delta != y.delta:
        raise ValueError("cannot compose elements specialised at different parameters")
    terms: dict = {}
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            d, loops = compose_diagrams(dy, dx)
            c = cy * cx * _loop_scalar(loops, x.delta)
            terms[d] = terms.get(d, 0) + c
    return AlgebraElement(x.bottom, y.top, terms, x.delta)


def tensor(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.delta != b.delta:
        raise ValueError("cannot tensor elements specialised at different parameters")
    terms: dict = {}
    for da, ca in a.terms.items():
        for db, cb in b.terms.items():
            d = tensor_diagrams(da, db)
            terms[d] = terms.get(d, 0) + ca * cb
    return AlgebraElement(a.bottom + b.bottom, a.top + b.top, terms, a.delta)


def tensor_all(parts: Iterable[AlgebraElement]) -> AlgebraElement:
    parts = list(parts)
    out = parts[0]
    for p in parts[1:]:
        out = tensor(out, p)
    return out


# --- structure morphisms -------------------------------------------------


def identity(w: str, delta=None) -> AlgebraElement:
    n = len(w)
    partner = tuple(list(range(n, 2 * n)) + list(range(n)))
    return AlgebraElement.of(WalledDiagram(w, w, partner), 1, delta)


def braiding(w1: str, w2: str, delta=None) -> AlgebraElement:
    """``c_{w1,w2}: w1 w2 -> w2 w1``."""
    a, b = len(w1), len(w2)
    n = a + b
    partner = [0] * (2 * n)
    for i in range(a):
        partner[i], partner[n + b + i] = n + b + i, i
    for j in range(b):
        partner[a + j], partner[n + j] = n + j, a + j
    return AlgebraElement.of(WalledDiagram(w1 + w2, w2 + w1, tuple(partner)), 1, delta)


def ev(w: str, delta=None) -> AlgebraElement:
    """``ev_w: w* w -> 1``, joining the i-th letters of ``w*`` and ``w``."""
    n = len(w)
    partner = tuple(list(range(n, 2 * n)) + list(range(n)))
    return AlgebraElement.of(WalledDiagram(dual_word(w) + w, "", partner), 1, delta)


def coev(w: str, delta=None) -> AlgebraElement:
    """``coev_w: 1 -> w w*``."""
    n = len(w)
    partner = tuple(list(range(n, 2 * n)) + list(range(n)))
    return AlgebraElement.of(WalledDiagram("", w + dual_word(w), partner), 1, delta)


def _ids(letter: str, k: int, delta) -> list[AlgebraElement]:
    return [identity(letter, delta) for _ in range(k)]


def _wrap(r: int, mid: AlgebraElement, s: int, delta) -> AlgebraElement:
    return tensor_all(_ids(BLACK, r, delta) + [mid] + _ids(WHITE, s, delta))


def psi(r: int, s: int, delta=None) -> AlgebraElement:
    """``w_{r,s} -> w_{r+1,s+1}`` inserting ``coev`` between the colours."""
    return _wrap(r, coev(BLACK, delta), s, delta)


def psihat(r: int, s: int, delta=None) -> AlgebraElement:
    """``w_{r+1,s+1} -> w_{r,s}`` closing the middle pair with ``ev``."""
    return _wrap(r, ev(WHITE, delta), s, delta)


def phi(r: int, s: int, delta=None) -> AlgebraElement:
    if s <= 0:
        raise ValueError("phi_{r,s} requires s > 0")
    core = compose(
        tensor(ev(WHITE, delta), identity(WHITE, delta)),
        tensor(identity(BLACK, delta), braiding(WHITE, WHITE, delta)),
    )
    return _wrap(r, core, s - 1, delta)


def phihat(r: int, s: int, delta=None) -> AlgebraElement:
    if r <= 0:
        raise ValueError("phihat_{r,s} requires r > 0")
    core = compose(
        tensor(identity(BLACK, delta), ev(WHITE, delta)),
        tensor(braiding(BLACK, BLACK, delta), identity(WHITE, delta)),
    )
    return _wrap(r - 1, core, s, delta)


# --- symmetric group pieces ----------------------------------------------


def permutation_diagram(sigma, color: str = BLACK) -> WalledDiagram:
    """Bottom vertex ``i`` joined to top vertex ``sigma[i]`` (0-based)."""
    r = len(sigma)
    partner = [0] * (2 * r)
    for i, j in enumerate(sigma):
        partner[i], partner[r + j] = r + j, i
    w = color * r
    return WalledDiagram(w, w, tuple(partner))


def _sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _subgroup(blocks: list[list[int]], r: int) -> Iterator[tuple[int, ...]]:
    """Permutations of ``range(r)`` preserving each block."""
    for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = list(range(r))
        for block, img in zip(blocks, images):
            for a, b in zip(block, img):
                perm[a] = b
        yield tuple(perm)


def young_symmetrizer(alpha, color: str = BLACK, delta=None) -> AlgebraElement:
    """The normalised Young symmetrizer of the row-reading tableau of ``alpha``."""
    alpha = Partition(alpha)
    r = sum(alpha)
    if r == 0:
        return identity("", delta)
    rows, start = [], 0
    for part in alpha:
        rows.append(list(range(start, start + part)))
        start += part
    cols = [[rows[i][j] for i in range(len(rows)) if j < len(rows[i])] for j in range(alpha[0])]
    w = color * r
    one = RationalFunction.const(1) if delta is None else Fraction(1)
    row_sym = AlgebraElement(
        w, w, {permutation_diagram(p, color): one for p in _subgroup(rows, r)}, delta
    )
    col_sym = AlgebraElement(
        w, w, {permutation_diagram(p, color): _sign(p) * one for p in _subgroup(cols, r)}, delta
    )
    y = compose(row_sym, col_sym)
    # y^2 = (r!/f) y; f = number of standard tableaux
    hooks = 1
    t = transpose(alpha)
    for i, row in enumerate(alpha):
        for j in range(row):
            hooks *= (row - j - 1) + (t[j] - i - 1) + 1
    scale = Fraction(1, hooks)
    assert scale != 0
    return scale * y


def z_idempotent(lam: Bipartition, delta=None) -> AlgebraElement:
    """``z_{lam_black} (x) z_{lam_white}`` in ``B_{r,s}``."""
    return tensor(
        young_symmetrizer(lam.black, BLACK, delta), young_symmetrizer(lam.white, WHITE, delta)
    )


def _shape(w: str) -> tuple[int, int]:
    r = w.count(BLACK)
    if w != w_rs(r, len(w) - r):
        raise ValueError(f"{w!r} is not of the form w_(r,s)")
    return r, len(w) - r


def pi_projection(a: AlgebraElement) -> AlgebraElement:
    """Kill diagrams with fewer than ``r+s`` propagating edges."""
    if a.bottom != a.top:
        raise ValueError("pi is defined on endomorphisms of w_(r,s)")
    _shape(a.bottom)
    full = len(a.bottom)
    return AlgebraElement(
        a.bottom, a.top, {d: c for d, c in a.terms.items() if d.propagating == full}, a.delta
    )


def flip_diagram(d: WalledDiagram) -> WalledDiagram:
    n, m = len(d.bottom), len(d.top)

    def swap(v):
        return m + v if v < n else v - n

    partner = [0] * (n + m)
    for v, p in enumerate(d.partner):
        partner[swap(v)] = swap(p)
    return WalledDiagram(d.top, d.bottom, tuple(partner))


def flip(a: AlgebraElement) -> AlgebraElement:
    """Read every diagram upside down (anti-automorphism)."""
    return AlgebraElement(
        a.top, a.bottom, {flip_diagram(d): c for d, c in a.terms.items()}, a.delta
    )


def embed_idempotent(e: AlgebraElement, lam: Bipartition, i: int) -> AlgebraElement:
    """Push an idempotent for ``lam`` from ``B_{r,s}`` up to ``B_{r+i,s+i}``.

    Uses ``psi e phi`` when ``lam`` has white boxes, ``psi e phihat`` when it is
    purely black, and ``(1/delta) psi e psihat`` for the empty bipartition.
    """
    r, s = lam.size
    if (e.bottom, e.top) != (w_rs(r, s), w_rs(r, s)):
        raise ValueError("idempotent does not live in B_{r,s} for lam")
    d = e.delta
    for k in range(1, i + 1):
        a, b = r + k - 1, s + k - 1
        if s > 0:
            e = compose(psi(a, b, d), compose(e, phi(a, b, d)))
        elif r > 0:
            e = compose(psi(a, b, d), compose(e, phihat(a, b, d)))
        else:
            if d == 0:
                raise ValueError("embedding of the empty bipartition is undefined at delta=0")
            inv = (1 / RationalFunction.t_power(1)) if d is None else 1 / d
            e = inv * compose(psi(a, b, d), compose(e, psihat(a, b, d)))
    return e
