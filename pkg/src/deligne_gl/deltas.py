"""The parameter ``delta``: an exact rational, or the generic indeterminate ``t``."""

from __future__ import annotations

import re
from fractions import Fraction

from .combinatorics import ParseError


class Generic:
    """Marker for the generic parameter ``t``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "GENERIC"

    def __str__(self):
        return "t"

    def __reduce__(self):
        return (Generic, ())


GENERIC = Generic()

Delta = Fraction | Generic


def as_delta(value) -> Delta:
    if isinstance(value, Generic):
        return value
    if isinstance(value, str):
        return parse_delta(value)
    if isinstance(value, float):
        raise TypeError("delta must be exact; floats are not accepted")
    return Fraction(value)


def integral_value(delta) -> int | None:
    """``int(delta)`` when delta is an integer, else ``None`` (also for ``t``)."""
    if isinstance(delta, Generic):
        return None
    delta = Fraction(delta)
    return int(delta) if delta.denominator == 1 else None


def format_delta(delta) -> str:
    return "t" if isinstance(delta, Generic) else str(Fraction(delta))


_RATIONAL = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def parse_delta(text: str) -> Delta:
    s = text.strip()
    if s == "t":
        return GENERIC
    m = _RATIONAL.fullmatch(s)
    if not m:
        bad = next((i for i, ch in enumerate(s) if not (ch.isdigit() or ch in "+-/")), 0)
        raise ParseError(f"malformed delta {text!r}; expected 't', 'p' or 'p/q'", bad)
    p, q = int(m.group(1)), int(m.group(2) or 1)
    if q == 0:
        raise ParseError("zero denominator in delta", s.index("/") + 1)
    return Fraction(p, q)
