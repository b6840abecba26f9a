"""Monoids of (N0*)^k cut out by congruences and linear inequalities.

A system has congruence rows ``d.t in m N0*`` and inequality rows
``a.t >= b.t`` with nonnegative integer coefficients.  Equations are stored
as the two opposed inequality rows, so the dual system (every inequality
reversed, congruences kept) needs no special case for them.
"""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DimensionError, ParseError
from .extnat import (
    INF,
    ext_le,
    is_finite,
    mat_apply,
    multiple_test,
    row_dot,
)


def _int_row(row, k, what):
    row = tuple(row)
    if len(row) != k:
        raise DimensionError(f"{what} has length {len(row)}, expected {k}")
    for c in row:
        if isinstance(c, bool) or not isinstance(c, int) or c < 0:
            raise ParseError(f"{what} needs nonnegative integer entries, got {c!r}")
    return row


@dataclass(frozen=True)
class SystemSpec:
    """Rows are canonicalized on construction (sorted, deduplicated)."""

    k: int
    cong_rows: tuple = ()
    ineq_rows: tuple = ()
    unit: Optional[tuple] = None

    def __post_init__(self):
        k = self.k
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise ParseError(f"dimension must be a positive integer, got {k!r}")
        cong = set()
        for d, m in self.cong_rows:
            if isinstance(m, bool) or not isinstance(m, int) or m < 2:
                raise ParseError(f"modulus must be an integer >= 2, got {m!r}")
            cong.add((_int_row(d, k, "congruence row"), m))
        ineq = set()
        for a, b in self.ineq_rows:
            ineq.add((_int_row(a, k, "inequality lhs"), _int_row(b, k, "inequality rhs")))
        object.__setattr__(self, "cong_rows", tuple(sorted(cong)))
        object.__setattr__(self, "ineq_rows", tuple(sorted(ineq)))
        if self.unit is not None:
            object.__setattr__(self, "unit", _int_row(self.unit, k, "unit"))

    @classmethod
    def trivial(cls, k: int) -> "SystemSpec":
        return cls(k)

    def with_unit(self, unit) -> "SystemSpec":
        return SystemSpec(self.k, self.cong_rows, self.ineq_rows, unit)

    def equation_pairs(self):
        """Inequality rows (a, b) with a < b whose reverse is also present."""
        rows = set(self.ineq_rows)
        return [(a, b) for a, b in self.ineq_rows if a < b and (b, a) in rows]

    def __str__(self):
        return format_system(self)


@dataclass(frozen=True)
class EquationSystem:
    """Homogeneous integer system ``rows . x = 0`` over N0^N.

    The first ``project_to`` coordinates are the original variables, the
    rest are slacks.
    """

    N: int
    rows: tuple = field(default=())
    project_to: int = 0

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.N:
                raise DimensionError("equation row length differs from N")
        if self.project_to > self.N:
            raise DimensionError("projection exceeds number of variables")


class Classification(enum.Enum):
    NOT_MEMBER = "NotMember"
    V = "V"
    W_MINUS_V = "W_minus_V"
    INFINITE_PART = "InfinitePart"

    def __str__(self):
        return self.value


def _check_dim(x, S):
    if len(x) != S.k:
        raise DimensionError(f"vector of length {len(x)} for a system in {S.k} variables")


def is_member(x: Sequence, S: SystemSpec) -> bool:
    _check_dim(x, S)
    for d, m in S.cong_rows:
        if not multiple_test(row_dot(d, x), m):
            return False
    for a, b in S.ineq_rows:
        if not ext_le(row_dot(b, x), row_dot(a, x)):
            return False
    return True


def dual(S: SystemSpec) -> SystemSpec:
    return SystemSpec(S.k, S.cong_rows, tuple((b, a) for a, b in S.ineq_rows), S.unit)


def classify(x: Sequence, S: SystemSpec) -> Classification:
    if not is_member(x, S):
        return Classification.NOT_MEMBER
    if not is_finite(x):
        return Classification.INFINITE_PART
    if all(row_dot(a, x) == row_dot(b, x) for a, b in S.ineq_rows):
        return Classification.V
    return Classification.W_MINUS_V


def to_slack_equations(S: SystemSpec) -> EquationSystem:
    """Columns: the k variables, one slack u_j per inequality row
    (``a.t - b.t - u_j = 0``), one slack s_i per congruence row
    (``d.t - m s_i = 0``)."""
    k, l, n = S.k, len(S.ineq_rows), len(S.cong_rows)
    N = k + l + n
    rows = []
    for j, (a, b) in enumerate(S.ineq_rows):
        row = [ai - bi for ai, bi in zip(a, b)] + [0] * (l + n)
        row[k + j] = -1
        rows.append(tuple(row))
    for i, (d, m) in enumerate(S.cong_rows):
        row = list(d) + [0] * (l + n)
        row[k + l + i] = -m
        rows.append(tuple(row))
    return EquationSystem(N, tuple(rows), k)


def to_equality_equations(S: SystemSpec) -> EquationSystem:
    """Like :func:`to_slack_equations` but every inequality held as equality."""
    k, n = S.k, len(S.cong_rows)
    rows = []
    for a, b in S.ineq_rows:
        row = tuple(ai - bi for ai, bi in zip(a, b)) + (0,) * n
        if any(row):
            rows.append(row)
    for i, (d, m) in enumerate(S.cong_rows):
        row = list(d) + [0] * n
        row[k + i] = -m
        rows.append(tuple(row))
    return EquationSystem(k + n, tuple(sorted(set(rows))), k)


def _compose_row(row, C):
    return tuple(sum(r * C[i][j] for i, r in enumerate(row)) for j in range(len(C[0])))


def pullback(outer: SystemSpec, C: Sequence[Sequence[int]], inner: SystemSpec) -> SystemSpec:
    """System for ``{x in M(inner) : C x in M(outer)}``."""
    C = tuple(tuple(r) for r in C)
    if len(C) != outer.k:
        raise DimensionError(f"matrix has {len(C)} rows, outer system has {outer.k} variables")
    for r in C:
        _int_row(r, inner.k, "pullback matrix row")
    cong = list(inner.cong_rows)
    cong += [(_compose_row(d, C), m) for d, m in outer.cong_rows]
    ineq = list(inner.ineq_rows)
    ineq += [(_compose_row(a, C), _compose_row(b, C)) for a, b in outer.ineq_rows]
    return SystemSpec(inner.k, tuple(cong), tuple(ineq), inner.unit)


def is_member_pullback(x, outer, C, inner) -> bool:
    """Direct semantics of :func:`pullback`, for cross-checking."""
    return is_member(x, inner) and is_member(mat_apply(C, x), outer)


# -- text format ------------------------------------------------------------

def _ints(tokens, lineno):
    try:
        out = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None
    return out


def parse_system(text: str) -> SystemSpec:
    k = None
    unit = None
    cong, ineq = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "vars":
            if k is not None or len(rest) != 1:
                raise ParseError(f"line {lineno}: malformed or repeated 'vars'")
            k = _ints(rest, lineno)[0]
            continue
        if k is None:
            raise ParseError(f"line {lineno}: 'vars' must come first")
        if head == "unit":
            unit = _ints(rest, lineno)
        elif head == "cong":
            if len(rest) < 2 or rest[-2] != "mod":
                raise ParseError(f"line {lineno}: expected 'cong d1 ... dk mod m'")
            cong.append((tuple(_ints(rest[:-2], lineno)), _ints(rest[-1:], lineno)[0]))
        elif head in ("ineq", "eq"):
            op = ">=" if head == "ineq" else "="
            if rest.count(op) != 1:
                raise ParseError(f"line {lineno}: expected exactly one '{op}'")
            split = rest.index(op)
            a = tuple(_ints(rest[:split], lineno))
            b = tuple(_ints(rest[split + 1:], lineno))
            ineq.append((a, b))
            if head == "eq":
                ineq.append((b, a))
        else:
            raise ParseError(f"line {lineno}: unknown keyword {head!r}")
    if k is None:
        raise ParseError("missing 'vars' line")
    return SystemSpec(k, tuple(cong), tuple(ineq), None if unit is None else tuple(unit))


def format_system(S: SystemSpec) -> str:
    lines = [f"vars {S.k}"]
    if S.unit is not None:
        lines.append("unit " + " ".join(map(str, S.unit)))
    for d, m in S.cong_rows:
        lines.append("cong " + " ".join(map(str, d)) + f" mod {m}")
    pairs = S.equation_pairs()
    paired = set(pairs) | {(b, a) for a, b in pairs}
    for a, b in pairs:
        lines.append("eq " + " ".join(map(str, a)) + " = " + " ".join(map(str, b)))
    for a, b in S.ineq_rows:
        if (a, b) in paired:
            continue
        lines.append("ineq " + " ".join(map(str, a)) + " >= " + " ".join(map(str, b)))
    return "\n".join(lines) + "\n"


def system_to_dict(S: SystemSpec) -> dict:
    return {
        "vars": S.k,
        "unit": None if S.unit is None else list(S.unit),
        "cong": [{"d": list(d), "mod": m} for d, m in S.cong_rows],
        "ineq": [{"lhs": list(a), "rhs": list(b)} for a, b in S.ineq_rows],
    }


def system_from_dict(obj: dict) -> SystemSpec:
    try:
        return SystemSpec(
            obj["vars"],
            tuple((tuple(r["d"]), r["mod"]) for r in obj.get("cong", [])),
            tuple((tuple(r["lhs"]), tuple(r["rhs"])) for r in obj.get("ineq", [])),
            None if obj.get("unit") is None else tuple(obj["unit"]),
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed system object: {exc}") from None


def system_to_json(S: SystemSpec) -> str:
    return json.dumps(system_to_dict(S), sort_keys=True)


def system_from_json(text: str) -> SystemSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return system_from_dict(obj)


def load_system(path) -> SystemSpec:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return system_from_json(text)
    return parse_system(text)


def inf_pattern_grid(k: int, bound: int):
    """All vectors in ({0..bound} u {inf})^k."""
    values = list(range(bound + 1)) + [INF]
    return itertools.product(values, repeat=k)
