"""Minimal generating sets of the finite parts W = M n N0^k and
V = M n D(M) n N0^k, plus a brute-force enumeration oracle."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _backend
from ._search import decompose
from .extnat import canonical_key, canonical_sorted, format_vector, inf_scale
from .system import (
    EquationSystem,
    SystemSpec,
    is_member,
    to_equality_equations,
    to_slack_equations,
)


@dataclass(frozen=True)
class GeneratorSet:
    """A finite generator list in canonical (graded-lex) order."""

    dim: int
    gens: tuple = ()

    def __post_init__(self):
        gens = canonical_sorted(self.gens)
        for g in gens:
            if len(g) != self.dim:
                raise ValueError(f"generator {g} does not have length {self.dim}")
        object.__setattr__(self, "gens", tuple(gens))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __contains__(self, v):
        return tuple(v) in self.gens

    def lines(self):
        return [format_vector(g) for g in self.gens]

    def __str__(self):
        return "\n".join(self.lines())


def hilbert_basis(A: Sequence[Sequence[int]], N: int | None = None, backend=None) -> GeneratorSet:
    """Hilbert basis of ``{x in N0^N : A x = 0}``.

    With no rows every unit vector is a basis element.
    """
    rows = [tuple(r) for r in A]
    if N is None:
        if not rows:
            raise ValueError("N is required when A has no rows")
        N = len(rows[0])
    rows = [r for r in rows if any(r)]
    return GeneratorSet(N, tuple(_backend.completion(rows, N, backend=backend)))


def minimize(vectors: Iterable[Sequence], dim: int) -> GeneratorSet:
    """Greedy removal, largest first, of vectors that decompose over the rest."""
    current = [v for v in canonical_sorted(vectors) if any(a != 0 for a in v)]
    for v in sorted(current, key=canonical_key, reverse=True):
        others = [g for g in current if g != v]
        finite = [a for a in v if isinstance(a, int)]
        cap = (max(finite) if finite else 0) + 1
        if decompose(v, others, cap) is not None:
            current = others
    return GeneratorSet(dim, tuple(current))


def minimize_star(vectors: Iterable[Sequence], dim: int) -> GeneratorSet:
    """Like :func:`minimize`, but a vector is redundant when it lies in the
    span of the others with multiplicities in N0*, i.e. over the others and
    their infinite multiples."""
    current = [tuple(v) for v in canonical_sorted(vectors) if any(a != 0 for a in v)]
    for v in sorted(current, key=canonical_key, reverse=True):
        others = [g for g in current if g != v]
        pool = list(dict.fromkeys(others + [inf_scale(g) for g in others]))
        finite = [a for a in v if isinstance(a, int)]
        cap = (max(finite) if finite else 0) + 1
        if decompose(v, pool, cap) is not None:
            current = others
    return GeneratorSet(dim, tuple(current))


def project_and_minimize(G: Iterable[Sequence[int]], k: int) -> GeneratorSet:
    return minimize((tuple(g)[:k] for g in G), k)


def solve_equations(eq: EquationSystem, backend=None) -> GeneratorSet:
    basis = hilbert_basis(eq.rows, eq.N, backend=backend)
    return project_and_minimize(basis, eq.project_to)


def solve_W(S: SystemSpec, backend=None) -> GeneratorSet:
    return solve_equations(to_slack_equations(S), backend=backend)


def solve_V(S: SystemSpec, backend=None) -> GeneratorSet:
    return solve_equations(to_equality_equations(S), backend=backend)


def brute_solutions(S: SystemSpec, bound: int) -> list:
    """All finite members of M(S) in the box {0..bound}^k, canonical order."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    box = itertools.product(range(bound + 1), repeat=S.k)
    return canonical_sorted(x for x in box if is_member(x, S))
