"""Weight diagrams, cap diagrams and the decomposition numbers ``D'``.

A weight diagram labels every integer by one of

    ``^`` (up),  ``v`` (down),  ``x`` (cross),  ``o`` (circle)

and only a finite window deviates from the tails: everything left of the
window is ``^`` and everything right of it is ``v`` (integral parameter only).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import Bipartition, Partition
from .deltas import integral_value

UP, DOWN, CROSS, CIRCLE = "^", "v", "x", "o"

__all__ = [
    "WeightDiagram",
    "weight_diagram",
    "decode",
    "cap_diagram",
    "cap_diagram_fixed_point",
    "swap",
    "linked_set",
    "d_prime",
]


@dataclass(frozen=True)
class WeightDiagram:
    delta: int
    window: tuple[int, int]
    labels: str

    def label(self, i: int) -> str:
        lo, hi = self.window
        if i < lo:
            return UP
        if i > hi:
            return DOWN
        return self.labels[i - lo]

    def positions(self) -> range:
        return range(self.window[0], self.window[1] + 1)

    def to_json(self) -> dict:
        return {"delta": self.delta, "window": list(self.window), "labels": self.labels}


def _up_set(black: Partition, lo: int) -> set[int]:
    out, k = set(), 1
    while True:
        a = black.part(k) - k + 1
        if a < lo:
            return out
        out.add(a)
        k += 1


def _down_set(white: Partition, delta: int, hi: int) -> set[int]:
    out, k = set(), 1
    while True:
        b = k - delta - white.part(k)
        if b > hi and k > len(white):
            return out
        out.add(b)
        k += 1


def weight_diagram(lam: Bipartition, delta: int) -> WeightDiagram:
    """Label the integers by membership in the up set and the down set of ``lam``."""
    delta = int(delta)
    lo = min(-len(lam.black), 1 - delta - lam.white.part(1)) - 1
    hi = max(lam.black.part(1), len(lam.white) + 1 - delta) + 1
    ups = _up_set(lam.black, lo)
    downs = _down_set(lam.white, delta, hi)
    labels = []
    for i in range(lo, hi + 1):
        u, d = i in ups, i in downs
        labels.append(CROSS if u and d else UP if u else DOWN if d else CIRCLE)
    return WeightDiagram(delta, (lo, hi), "".join(labels))


def decode(x: WeightDiagram) -> Bipartition:
    """Inverse of :func:`weight_diagram`."""
    lo, hi = x.window
    if x.labels.count(CROSS) - x.labels.count(CIRCLE) != x.delta:
        raise ValueError("malformed weight diagram: #x - #o must equal delta")
    ups = [i for i in range(hi, lo - 1, -1) if x.label(i) in (UP, CROSS)]
    downs = [i for i in range(lo, hi + 1) if x.label(i) in (DOWN, CROSS)]
    black = [a + k for k, a in enumerate(ups)]
    white = [(k + 1) - x.delta - b for k, b in enumerate(downs)]
    # the first tail vertex on each side must decode to a zero part
    if (lo - 1) + len(ups) != 0 or (len(downs) + 1) - x.delta - (hi + 1) != 0:
        raise ValueError("malformed weight diagram: tails inconsistent with labels")
    try:
        return Bipartition(Partition(black), Partition(white))
    except ValueError as exc:
        raise ValueError(f"malformed weight diagram: {exc}") from None


def cap_diagram(x: WeightDiagram) -> frozenset[tuple[int, int]]:
    """Caps ``(i, j)`` joining a ``v`` at ``i`` to a ``^`` at ``j``.

    A left-to-right bracket scan: ``v`` opens, ``^`` closes the nearest open
    ``v``; crosses and circles are transparent.
    """
    stack: list[int] = []
    caps = set()
    for i in x.positions():
        lab = x.label(i)
        if lab == DOWN:
            stack.append(i)
        elif lab == UP and stack:
            caps.add((stack.pop(), i))
    return frozenset(caps)


def cap_diagram_fixed_point(x: WeightDiagram) -> frozenset[tuple[int, int]]:
    """The same caps, drawn round by round until nothing changes."""
    capped: set[int] = set()
    caps: set[tuple[int, int]] = set()
    pos = list(x.positions())
    while True:
        new = []
        for a, i in enumerate(pos):
            if i in capped or x.label(i) != DOWN:
                continue
            for j in pos[a + 1 :]:
                lab = x.label(j)
                if j in capped or lab in (CROSS, CIRCLE):
                    continue
                if lab == UP:
                    new.append((i, j))
                break
        if not new:
            return frozenset(caps)
        for i, j in new:
            caps.add((i, j))
            capped.update((i, j))


def swap(x: WeightDiagram, pairs) -> WeightDiagram:
    lo = x.window[0]
    labels = list(x.labels)
    for i, j in pairs:
        labels[i - lo], labels[j - lo] = labels[j - lo], labels[i - lo]
    return WeightDiagram(x.delta, x.window, "".join(labels))


@lru_cache(maxsize=None)
def _linked(lam: Bipartition, delta: int) -> frozenset[Bipartition]:
    x = weight_diagram(lam, delta)
    caps = sorted(cap_diagram(x))
    out = set()
    for k in range(len(caps) + 1):
        for subset in itertools.combinations(caps, k):
            out.add(decode(swap(x, subset)))
    return frozenset(out)


def linked_set(lam: Bipartition, delta) -> frozenset[Bipartition]:
    """Bipartitions obtained by swapping the ends of any subset of the caps of ``lam``.

    The caps are those of the original diagram of ``lam``.  For a non-integral
    or generic parameter there are no caps and the set is ``{lam}``.
    """
    lam = Bipartition(Partition(lam[0]), Partition(lam[1]))
    d = integral_value(delta)
    if d is None:
        return frozenset({lam})
    return _linked(lam, d)


def d_prime(lam: Bipartition, mu: Bipartition, delta) -> int:
    return int(mu in linked_set(lam, delta))
