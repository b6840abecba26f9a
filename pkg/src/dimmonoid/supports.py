"""Infinite-support analysis of monoids defined by inequalities.

Supports are frozensets of 0-based coordinate indices; they are rendered
1-based (``{1,3}``) for reports.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from ._search import decompose
from .errors import AdmissibilityError, CapacityError, InternalError
from .extnat import INF, format_vector, inf_supp
from .hilbert import GeneratorSet, minimize, solve_W
from .system import SystemSpec, is_member

MAX_SUPPORT_DIM = 16


def format_support(I) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(I)) + "}"


def support_key(I):
    return (len(I), sorted(I))


def admissible(I, S: SystemSpec) -> bool:
    """An infinite right-hand side must be matched by an infinite left side."""
    I = frozenset(I)
    for a, b in S.ineq_rows:
        hits_b = any(b[i] for i in I)
        if hits_b and not any(a[i] for i in I):
            return False
    return True


@dataclass(frozen=True)
class ReducedSystem:
    """System on the coordinates outside I; ``spec`` is None when I is everything."""

    outside: tuple
    spec: Optional[SystemSpec]

    def accepts(self, p) -> bool:
        return self.spec is None or is_member(p, self.spec)


def reduced_system(I, S: SystemSpec) -> ReducedSystem:
    I = frozenset(I)
    if not admissible(I, S):
        raise AdmissibilityError(f"support {format_support(I)} is not admissible", witness=I)
    outside = tuple(i for i in range(S.k) if i not in I)
    if not outside:
        return ReducedSystem(outside, None)

    def restrict(row):
        return tuple(row[i] for i in outside)

    cong = [(restrict(d), m) for d, m in S.cong_rows if not any(d[i] for i in I)]
    ineq = [(restrict(a), restrict(b)) for a, b in S.ineq_rows if not any(a[i] for i in I)]
    return ReducedSystem(outside, SystemSpec(len(outside), tuple(cong), tuple(ineq)))


@dataclass(frozen=True)
class SupportEntry:
    support: frozenset
    reduced: ReducedSystem
    generators: GeneratorSet  # of the finite part A_I, over the outside coordinates


@dataclass(frozen=True)
class SupportLattice:
    k: int
    entries: tuple  # SupportEntry, empty support first, then by size

    @property
    def family(self):
        return [e.support for e in self.entries]

    def entry(self, I) -> Optional[SupportEntry]:
        I = frozenset(I)
        for e in self.entries:
            if e.support == I:
                return e
        return None

    def contains(self, x) -> bool:
        """Membership through the presentation: admissible infinite support
        and a finite part decomposing over the generators of A_I."""
        e = self.entry(inf_supp(x))
        if e is None:
            return False
        p = tuple(x[i] for i in e.reduced.outside)
        if not p:
            return True
        return decompose(p, list(e.generators), max(p) + 1) is not None

    def lines(self):
        out = []
        for e in self.entries:
            gens = " ".join(format_vector(g) for g in e.generators) or "-"
            out.append(f"{format_support(e.support)} {gens}")
        return out


def _check_lattice(S, entries):
    by_support = {e.support: e for e in entries}
    family = set(by_support)
    for I, J in itertools.combinations(family, 2):
        if I | J not in family:
            raise InternalError(f"supports not closed under union: {format_support(I)}, {format_support(J)}")
    for e in entries:
        for h in e.generators:
            grown = e.support | {i for i, a in zip(e.reduced.outside, h) if a}
            if grown not in family:
                raise InternalError(f"support of {format_vector(h)} over {format_support(e.support)} not admissible")
        for K in family:
            if not e.support <= K or K == e.support:
                continue
            red = by_support[K].reduced
            for h in e.generators:
                full = dict(zip(e.reduced.outside, h))
                p = tuple(full[i] for i in red.outside)
                if not red.accepts(p):
                    raise InternalError(
                        f"projection of {format_vector(h)} from {format_support(e.support)} "
                        f"to {format_support(K)} leaves the reduced system"
                    )


def support_lattice(S: SystemSpec) -> SupportLattice:
    if S.k > MAX_SUPPORT_DIM:
        raise CapacityError(f"support enumeration limited to k <= {MAX_SUPPORT_DIM}")
    entries = []
    subsets = (
        frozenset(c) for r in range(S.k + 1) for c in itertools.combinations(range(S.k), r)
    )
    for I in sorted(subsets, key=support_key):
        if not admissible(I, S):
            continue
        red = reduced_system(I, S)
        gens = solve_W(red.spec) if red.spec is not None else GeneratorSet(0)
        entries.append(SupportEntry(I, red, gens))
    _check_lattice(S, entries)
    return SupportLattice(S.k, tuple(entries))


def build_system_of_supports(S: SystemSpec) -> SupportLattice:
    """The presentation {(I, generators of A_I)}; see :meth:`SupportLattice.contains`."""
    return support_lattice(S)


def _lift(I, outside, h, k):
    v = [0] * k
    for i in I:
        v[i] = INF
    for i, a in zip(outside, h):
        v[i] = a
    return tuple(v)


def generators_extended(S: SystemSpec) -> GeneratorSet:
    """A (minimized) generating set of M over N0* with finite multiplicities."""
    lattice = support_lattice(S)
    cands = []
    for e in lattice.entries:
        outs = e.reduced.outside
        finite_parts = list(e.generators)
        if e.support:
            finite_parts.append((0,) * len(outs))
        cands += [_lift(e.support, outs, h, S.k) for h in finite_parts]
    return minimize(cands, S.k)

