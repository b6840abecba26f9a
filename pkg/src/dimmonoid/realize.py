"""Compile a system into pullbacks of primitive blocks and check that the
construction denotes M and, after reversing every GS block, D(M).

Primitive blocks: the GS block ``{(p, q) : p >= q}`` on (N0*)^2 (or its
reverse ``q >= p``) and the congruence block ``m N0*`` on N0*.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from .errors import ConfigurationError, DimensionError
from .extnat import ext_le, mat_apply, multiple_test, row_dot
from .system import Classification, SystemSpec, classify, dual, inf_pattern_grid, is_member


@dataclass(frozen=True)
class GSBlock:
    reversed: bool = False
    arity = 2

    def contains(self, v) -> bool:
        p, q = v
        return ext_le(p, q) if self.reversed else ext_le(q, p)

    def describe(self):
        return "GS (y >= x)" if self.reversed else "GS (x >= y)"


@dataclass(frozen=True)
class CongruenceBlock:
    m: int
    arity = 1

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("congruence block needs m >= 2")

    def contains(self, v) -> bool:
        return multiple_test(v[0], self.m)

    def describe(self):
        return f"Congruence mod {self.m}"


PrimitiveBlock = Union[GSBlock, CongruenceBlock]


@dataclass(frozen=True)
class Pullback:
    """Membership of x is membership of ``matrix . x`` in ``target``."""

    matrix: tuple
    target: "PrimitiveBlock | ConstructionTrace"

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in self.matrix))
        if len(self.matrix) != self.target.arity:
            raise DimensionError(
                f"pullback matrix has {len(self.matrix)} rows, target arity is {self.target.arity}"
            )


@dataclass(frozen=True)
class ConstructionTrace:
    """Intersection node over ``arity`` ambient variables."""

    arity: int
    children: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        for child in self.children:
            if any(len(r) != self.arity for r in child.matrix):
                raise DimensionError("pullback matrix columns must match the ambient dimension")


def compile_system(S: SystemSpec) -> ConstructionTrace:
    children = [Pullback((d,), CongruenceBlock(m)) for d, m in S.cong_rows]
    children += [Pullback((a, b), GSBlock()) for a, b in S.ineq_rows]
    return ConstructionTrace(S.k, tuple(children))


def denote(T: ConstructionTrace, x) -> bool:
    if len(x) != T.arity:
        raise DimensionError(f"vector of length {len(x)} for a trace over {T.arity} variables")
    for child in T.children:
        y = mat_apply(child.matrix, x)
        target = child.target
        if isinstance(target, ConstructionTrace):
            if not denote(target, y):
                return False
        elif not target.contains(y):
            return False
    return True


def dualize_trace(T: ConstructionTrace) -> ConstructionTrace:
    children = []
    for child in T.children:
        target = child.target
        if isinstance(target, ConstructionTrace):
            target = dualize_trace(target)
        elif isinstance(target, GSBlock):
            target = GSBlock(not target.reversed)
        children.append(Pullback(child.matrix, target))
    return replace(T, children=tuple(children))


def swap_pullback_rows(T: ConstructionTrace, index: int) -> ConstructionTrace:
    """Copy of T with the two rows of the ``index``-th pullback exchanged."""
    children = list(T.children)
    child = children[index]
    if len(child.matrix) != 2:
        raise ValueError("only 2-row pullbacks can be swapped")
    children[index] = Pullback((child.matrix[1], child.matrix[0]), child.target)
    return replace(T, children=tuple(children))


def counterexample(T: ConstructionTrace, S: SystemSpec, bound: int):
    """First grid point where T disagrees with M(S), or dualize(T) with
    M(D(S)); returned as ``(x, "primal" | "dual")``.  None if they agree."""
    if T.arity != S.k:
        raise DimensionError("trace and system have different dimensions")
    D = dualize_trace(T)
    DS = dual(S)
    for x in inf_pattern_grid(S.k, bound):
        if denote(T, x) != is_member(x, S):
            return x, "primal"
        if denote(D, x) != is_member(x, DS):
            return x, "dual"
    return None


def verify(T: ConstructionTrace, S: SystemSpec, bound: int = 4) -> bool:
    return counterexample(T, S, bound) is None


def validate_unit(S: SystemSpec) -> bool:
    """The unit must be a strictly positive element of M n D(M)."""
    if S.unit is None:
        raise ConfigurationError("system has no unit")
    u = S.unit
    if any(c < 1 for c in u):
        return False
    if any(row_dot(a, u) != row_dot(b, u) for a, b in S.ineq_rows):
        return False
    if any(row_dot(d, u) % m for d, m in S.cong_rows):
        return False
    return classify(u, S) is Classification.V


def _format_matrix(M):
    return "[" + "; ".join(" ".join(str(c) for c in row) for row in M) + "]"


def format_trace(T: ConstructionTrace, indent: int = 0) -> str:
    pad = "  " * indent
    lines = [f"{pad}Intersection arity={T.arity} children={len(T.children)}"]
    for child in T.children:
        lines.append(f"{pad}  Pullback {_format_matrix(child.matrix)}")
        if isinstance(child.target, ConstructionTrace):
            lines.append(format_trace(child.target, indent + 2).rstrip("\n"))
        else:
            lines.append(f"{pad}    {child.target.describe()}")
    return "\n".join(lines) + "\n"


def trace_to_dict(T: ConstructionTrace) -> dict:
    children = []
    for child in T.children:
        target = child.target
        if isinstance(target, ConstructionTrace):
            t = trace_to_dict(target)
        elif isinstance(target, GSBlock):
            t = {"block": "GS", "reversed": target.reversed}
        else:
            t = {"block": "congruence", "mod": target.m}
        children.append({"matrix": [list(r) for r in child.matrix], "target": t})
    return {"arity": T.arity, "children": children}
