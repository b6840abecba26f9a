"""Arithmetic of the monoid N0* = N0 u {inf} and of vectors over it.

Finite values are plain Python ints (unbounded). Infinity is the singleton
:data:`INF`, a distinct object that is never confused with an integer.
Vectors are tuples.
"""
from __future__ import annotations

import functools
from typing import Iterable, Sequence, Union

from .errors import DimensionError, ParseError


@functools.total_ordering
class Infinity:
    """The absorbing element of N0*. Compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self):
        return hash("dimmonoid.INF")

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

ExtNat = Union[int, Infinity]
ExtVector = tuple


def is_inf(a) -> bool:
    return a is INF


def check_extnat(a) -> ExtNat:
    if a is INF:
        return a
    if isinstance(a, bool) or not isinstance(a, int) or a < 0:
        raise ValueError(f"not an element of N0*: {a!r}")
    return a


def ext_add(a: ExtNat, b: ExtNat) -> ExtNat:
    if a is INF or b is INF:
        return INF
    return a + b


def scale(c: int, a: ExtNat) -> ExtNat:
    """c-fold sum of ``a``; ``scale(0, INF) == 0``."""
    if c < 0:
        raise ValueError("scalar must be nonnegative")
    if c == 0:
        return 0
    if a is INF:
        return INF
    return c * a


def ext_le(a: ExtNat, b: ExtNat) -> bool:
    """Total order of N0*: integers as usual, INF maximal."""
    if b is INF:
        return True
    if a is INF:
        return False
    return a <= b


def row_dot(row: Sequence[int], v: Sequence[ExtNat]) -> ExtNat:
    if len(row) != len(v):
        raise DimensionError(f"row of length {len(row)} applied to vector of length {len(v)}")
    total = 0
    for c, a in zip(row, v):
        if c == 0:
            continue
        if a is INF:
            return INF
        total += c * a
    return total


def multiple_test(a: ExtNat, m: int) -> bool:
    """True iff ``a`` lies in m*N0* (INF always does)."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    return a is INF or a % m == 0


# -- vectors ---------------------------------------------------------------

def vec(entries: Iterable) -> ExtVector:
    return tuple(check_extnat(a) for a in entries)


def vec_add(x: Sequence[ExtNat], y: Sequence[ExtNat]) -> ExtVector:
    if len(x) != len(y):
        raise DimensionError("vector lengths differ")
    return tuple(ext_add(a, b) for a, b in zip(x, y))


def vec_scale(c: int, x: Sequence[ExtNat]) -> ExtVector:
    return tuple(scale(c, a) for a in x)


def inf_scale(x: Sequence[ExtNat]) -> ExtVector:
    """The limit inf*x: INF on supp(x), 0 elsewhere."""
    return tuple(INF if a is INF or a > 0 else 0 for a in x)


def mat_apply(C: Sequence[Sequence[int]], x: Sequence[ExtNat]) -> ExtVector:
    return tuple(row_dot(row, x) for row in C)


def is_finite(x: Sequence[ExtNat]) -> bool:
    return all(a is not INF for a in x)


def supp(x: Sequence[ExtNat]) -> frozenset:
    return frozenset(i for i, a in enumerate(x) if a is INF or a > 0)


def inf_supp(x: Sequence[ExtNat]) -> frozenset:
    return frozenset(i for i, a in enumerate(x) if a is INF)


def is_idempotent(x: Sequence[ExtNat]) -> bool:
    return vec_add(x, x) == tuple(x)


def canonical_key(x: Sequence[ExtNat]):
    """Graded-lex key: finite vectors by (degree, lex) first, then vectors
    with infinite entries in lex order with INF maximal."""
    if is_finite(x):
        return (0, sum(x), tuple(x))
    return (1, 0, tuple((1, 0) if a is INF else (0, a) for a in x))


def canonical_sorted(vectors: Iterable[Sequence[ExtNat]]) -> list:
    return sorted({tuple(v) for v in vectors}, key=canonical_key)


# -- text ------------------------------------------------------------------

def format_extnat(a: ExtNat) -> str:
    return "inf" if a is INF else str(a)


def parse_extnat(token: str) -> ExtNat:
    t = token.strip()
    if t in ("inf", "∞"):
        return INF
    if not (t.isascii() and t.isdigit()):
        raise ParseError(f"bad N0* literal: {token!r}")
    return int(t)


def format_vector(x: Sequence[ExtNat]) -> str:
    return "(" + ",".join(format_extnat(a) for a in x) + ")"


def parse_vector(text: str) -> ExtVector:
    """Accepts ``"3 inf"``, ``"3,inf"`` or ``"(3,inf)"``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    tokens = body.replace(",", " ").split()
    return tuple(parse_extnat(t) for t in tokens)


def to_json_value(a: ExtNat):
    return "inf" if a is INF else a


def from_json_value(v) -> ExtNat:
    if v == "inf" or v == "∞":
        return INF
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise ParseError(f"bad N0* JSON value: {v!r}")
    return v
