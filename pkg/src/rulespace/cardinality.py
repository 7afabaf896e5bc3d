"""Exact search-space cardinalities.

A cardinality is either a plain Python ``int`` (arbitrary precision, so
quantities like 62**11 stay exact through sums, products, and minimums) or
the :data:`UNBOUNDED` sentinel, which absorbs addition/multiplication and
compares greater than every finite value. Base-2 bit rendering is for
display only and never feeds back into arithmetic.
"""

from __future__ import annotations

import math
from typing import Union


class _Unbounded:
    """Absorbing infinite cardinality (singleton, see :data:`UNBOUNDED`)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNBOUNDED"

    # -- absorbing arithmetic ------------------------------------------------
    def __add__(self, other):
        return self

    __radd__ = __add__
    __mul__ = __add__
    __rmul__ = __add__

    def __truediv__(self, other):
        return self

    def __floordiv__(self, other):
        return self

    # -- total order: greater than every finite value ------------------------
    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("rulespace.UNBOUNDED")


UNBOUNDED = _Unbounded()

# A cardinality: exact non-negative int, or the absorbing sentinel.
Cardinality = Union[int, _Unbounded]


def is_finite(value: Cardinality) -> bool:
    return value is not UNBOUNDED


def bits(value: Cardinality) -> float:
    """Base-2 logarithm for reporting. Display only.

    Handles integers too large for ``math.log2`` by splitting off the
    leading power of two. ``bits(0)`` is ``-inf`` and ``bits(UNBOUNDED)``
    is ``+inf``; callers serializing to JSON must guard non-finite floats.
    """
    if value is UNBOUNDED:
        return math.inf
    if not isinstance(value, int) or value < 0:
        raise TypeError(f"not a cardinality: {value!r}")
    if value == 0:
        return -math.inf
    exponent = value.bit_length() - 1
    # value / 2**exponent is in [1, 2) and safely representable as a float
    return exponent + math.log2(value / (1 << exponent))


def geometric_length_sum(base: int, min_length: int, max_length: int) -> int:
    """Exact count of strings over a ``base``-symbol set with lengths in
    ``[min_length, max_length]``: sum of base**i. Empty ranges count 0."""
    if base < 0 or min_length < 0:
        raise ValueError("base and lengths must be non-negative")
    if max_length < min_length:
        return 0
    return sum(base**i for i in range(min_length, max_length + 1))
