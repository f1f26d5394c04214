"""Exact computations in Deligne's interpolation category Rep(GL_delta)."""

from __future__ import annotations

from .combinatorics import Bipartition, Partition, format_bipartition, lr_coefficient, parse_bipartition
from .deltas import GENERIC, parse_delta
from .grothendieck import RingVector, bilinear_form, lift, product_at, product_generic, unlift
from .schur import LaurentPolynomial, character, composite_schur, dim_W

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "Partition",
    "GENERIC",
    "RingVector",
    "LaurentPolynomial",
    "parse_bipartition",
    "format_bipartition",
    "parse_delta",
    "lr_coefficient",
    "lift",
    "unlift",
    "product_generic",
    "product_at",
    "bilinear_form",
    "character",
    "composite_schur",
    "dim_W",
]
