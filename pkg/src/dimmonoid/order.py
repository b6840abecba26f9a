"""Decomposition search, algebraic preorder and structural invariants."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import _backend
from ._search import decompose
from .errors import CapacityError, ConfigurationError, InternalError, NotFullAffineError, NotMemberError
from .extnat import INF, canonical_sorted, format_vector, is_finite, supp
from .hilbert import GeneratorSet, hilbert_basis, minimize, solve_V, solve_W
from .lattice import lattice_description
from .system import Classification, SystemSpec, classify, dual, is_member

MAX_ENUM_DIM = 16


def _max_finite(x):
    finite = [a for a in x if a is not None and a is not INF]
    return max(finite) if finite else 0


def _gens(G):
    return list(G.gens) if isinstance(G, GeneratorSet) else [tuple(g) for g in G]


def submonoid_member(x, G):
    """A decomposition ``{generator: multiplicity}`` of x over G, or None."""
    x = tuple(x)
    gens = _gens(G)
    for g in gens:
        if len(g) != len(x):
            raise ValueError("generator and vector lengths differ")
    return decompose(x, gens, _max_finite(x) + 1)


def alg_leq(x, y, G) -> bool:
    """x <= y in the algebraic preorder of <G>: y = x + z for some z in <G>."""
    x, y = tuple(x), tuple(y)
    target = []
    for a, b in zip(x, y):
        if b is INF:
            target.append(None if a is INF else INF)
        elif a is INF or a > b:
            return False
        else:
            target.append(b - a)
    return decompose(tuple(target), _gens(G), _max_finite(y) + 1) is not None


def idempotents(S: SystemSpec) -> list:
    if S.k > MAX_ENUM_DIM:
        raise CapacityError(f"idempotent enumeration limited to k <= {MAX_ENUM_DIM}")
    cands = itertools.product((0, INF), repeat=S.k)
    return canonical_sorted(x for x in cands if is_member(x, S))


def _below(g):
    """All nonzero vectors w <= g componentwise with w != g."""
    for w in itertools.product(*(range(a + 1) for a in g)):
        if any(w) and w != g:
            yield w


def minimal_elements(S: SystemSpec, mode: str = "W") -> list:
    """Minimal elements of W (componentwise order) or of W minus V
    (algebraic order of W: w <= g iff g - w lies in W).

    ``mode`` is ``"W"`` or ``"W_minus_V"``.  Every minimal element is an
    atom of W, so only generators of W are candidates.
    """
    W = solve_W(S)
    out = []
    if mode == "W":
        for g in W:
            if not any(is_member(w, S) for w in _below(g)):
                out.append(g)
    elif mode == "W_minus_V":
        strict = Classification.W_MINUS_V
        for g in W:
            if classify(g, S) is not strict:
                continue
            if not any(
                classify(w, S) is strict and is_member(tuple(a - b for a, b in zip(g, w)), S)
                for w in _below(g)
            ):
                out.append(g)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return canonical_sorted(out)


def is_superdecomposable(x, S: SystemSpec) -> bool:
    x = tuple(x)
    if not is_member(x, S):
        raise NotMemberError(f"{format_vector(x)} is not in the monoid", witness=x)
    sx = supp(x)
    if not sx:
        return False
    return not any(supp(g) <= sx for g in solve_W(S))


# -- full affineness and equation synthesis -----------------------------------

def _lattice_system(gens, k) -> SystemSpec:
    """Congruence/equation system whose N0^k solutions are Z<gens> n N0^k."""
    equations, congruences = lattice_description(gens, k)
    ineq = []
    for c in equations:
        a = tuple(max(v, 0) for v in c)
        b = tuple(max(-v, 0) for v in c)
        ineq += [(a, b), (b, a)]
    return SystemSpec(k, tuple(congruences), tuple(ineq))


def _require_finite(gens):
    for g in gens:
        if not is_finite(g):
            raise ValueError(f"generator {format_vector(g)} has an infinite entry")


def is_full_affine(G, method: str = "lattice"):
    """``(True, None)`` if <G> = Z<G> n N0^k, else ``(False, witness)``
    with a witness in Z<G> n N0^k outside <G>.

    ``method="lattice"`` describes Z<G> by elementary divisors and takes the
    Hilbert basis of its nonnegative part.  ``method="differences"`` takes
    the Hilbert basis of ``{(x, a, b) : x + sum b_i g_i = sum a_i g_i}`` and
    projects to x; it is exponential in |G| and meant for small sets.
    """
    gens = _gens(G)
    _require_finite(gens)
    if isinstance(G, GeneratorSet):
        k = G.dim
    elif gens:
        k = len(gens[0])
    else:
        raise ValueError("dimension of an empty generator list is unknown")
    if method == "lattice":
        candidates = solve_W(_lattice_system(gens, k))
    elif method == "differences":
        n = len(gens)
        rows = []
        for c in range(k):
            row = [0] * (k + 2 * n)
            row[c] = 1
            for i, g in enumerate(gens):
                row[k + i] = -g[c]
                row[k + n + i] = g[c]
            rows.append(row)
        candidates = minimize((h[:k] for h in hilbert_basis(rows, k + 2 * n)), k)
    else:
        raise ValueError(f"unknown method {method!r}")
    for c in candidates:
        if submonoid_member(c, gens) is None:
            return False, c
    return True, None


def synthesize_equations(G) -> SystemSpec:
    """Equation pairs plus congruences whose finite solutions are exactly <G>."""
    gens = _gens(G)
    _require_finite(gens)
    if isinstance(G, GeneratorSet):
        k = G.dim
    elif gens:
        k = len(gens[0])
    else:
        raise ValueError("dimension of an empty generator list is unknown")
    ok, witness = is_full_affine(GeneratorSet(k, tuple(gens)))
    if not ok:
        raise NotFullAffineError(f"<G> is not full affine: {format_vector(witness)} is missing", witness=witness)
    S = _lattice_system(gens, k)
    if solve_W(S).gens != minimize(gens, k).gens:
        raise InternalError("synthesized system does not reproduce the generator set")
    return S


# -- unperforation and reflection -------------------------------------------

def _table_lookup(table, bounds, v):
    idx = 0
    for a, b in zip(v, bounds):
        if a < 0 or a > b:
            return False
        idx = idx * (b + 1) + a
    return bool(table[idx])


def _box_members(table, bounds, box):
    """Members of the table (built for ``bounds``) inside the smaller ``box``."""
    return [
        v for v in itertools.product(*(range(b + 1) for b in box))
        if _table_lookup(table, bounds, v)
    ]


def unperforated_check(G, n_max: int = 3, bound: int = 6):
    """Sampled unperforation test of <G> (all-finite generators).

    For members x, y of <G> with entries <= bound and 2 <= n <= n_max,
    n x <= n y in the algebraic order must imply x <= y.  Returns
    ``(True, None)`` or ``(False, (n, x, y))`` for the first violation.
    """
    gens = _gens(G)
    _require_finite(gens)
    k = G.dim if isinstance(G, GeneratorSet) else len(gens[0])
    big = [n_max * bound] * k
    table = _backend.span_table(gens, big)
    members = canonical_sorted(_box_members(table, big, [bound] * k))
    for x in members:
        for y in members:
            diff = tuple(b - a for a, b in zip(x, y))
            if any(d < 0 for d in diff) or _table_lookup(table, big, diff):
                continue
            for n in range(2, n_max + 1):
                if _table_lookup(table, big, tuple(n * d for d in diff)):
                    return False, (n, x, y)
    return True, None


def reflection_counterexample(S: SystemSpec, bound: int):
    """Check ``x in W(D(S)) iff m u - x in W(S)`` with m = max ceil(x_i/u_i)
    for every x in {0..bound}^k, both sides read off generator spans.

    Returns None or the first failing x.
    """
    if S.unit is None:
        raise ConfigurationError("reflection test needs an order unit")
    u = S.unit
    if any(c < 1 for c in u):
        raise ConfigurationError("order unit must be strictly positive")
    m_max = max(-(-bound // c) for c in u)
    big = [m_max * c for c in u]
    w_table = _backend.span_table(list(solve_W(S)), big)
    d_bounds = [bound] * S.k
    d_table = _backend.span_table(list(solve_W(dual(S))), d_bounds)
    for x in itertools.product(range(bound + 1), repeat=S.k):
        m = max(-(-a // c) for a, c in zip(x, u))
        lhs = _table_lookup(d_table, d_bounds, x)
        rhs = any(
            _table_lookup(w_table, big, tuple(mm * c - a for a, c in zip(x, u)))
            for mm in range(m + 1)
        )
        if lhs != rhs:
            return x
    return None


def intersection_counterexample(S: SystemSpec, bound: int):
    """First x in {0..bound}^k where <V> differs from <W(S)> n <W(D(S))>."""
    bounds = [bound] * S.k
    v = _backend.span_table(list(solve_V(S)), bounds)
    w = _backend.span_table(list(solve_W(S)), bounds)
    wd = _backend.span_table(list(solve_W(dual(S))), bounds)
    for i, x in enumerate(itertools.product(range(bound + 1), repeat=S.k)):
        if bool(v[i]) != bool(w[i] and wd[i]):
            return x
    return None


# -- invariant report -------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    idempotents: tuple
    w_generators: tuple
    minimal_of_W: tuple
    minimal_of_W_minus_V: tuple
    supports: tuple
    extended_generators: tuple = field(default=())

    @property
    def idempotent_count(self):
        return len(self.idempotents)

    @property
    def extended_generator_count(self):
        return len(self.extended_generators)

    def counts(self) -> dict:
        return {
            "idempotent_count": self.idempotent_count,
            "w_generator_count": len(self.w_generators),
            "minimal_W_count": len(self.minimal_of_W),
            "minimal_W_minus_V_count": len(self.minimal_of_W_minus_V),
            "support_count": len(self.supports),
            "extended_generator_count": self.extended_generator_count,
        }

    def lines(self):
        from .supports import format_support

        def vecs(vs):
            return " ".join(format_vector(v) for v in vs) or "-"

        return [
            f"idempotent_count {self.idempotent_count}",
            f"idempotents {vecs(self.idempotents)}",
            f"w_generators {vecs(self.w_generators)}",
            f"minimal_W {vecs(self.minimal_of_W)}",
            f"minimal_W_minus_V {vecs(self.minimal_of_W_minus_V)}",
            "supports " + " ".join(format_support(I) for I in self.supports),
            f"extended_generator_count {self.extended_generator_count}",
            f"extended_generators {vecs(self.extended_generators)}",
        ]

    def to_dict(self):
        from .extnat import to_json_value

        def vecs(vs):
            return [[to_json_value(a) for a in v] for v in vs]

        return {
            "idempotents": vecs(self.idempotents),
            "w_generators": vecs(self.w_generators),
            "minimal_W": vecs(self.minimal_of_W),
            "minimal_W_minus_V": vecs(self.minimal_of_W_minus_V),
            "supports": [sorted(i + 1 for i in I) for I in self.supports],
            "extended_generators": vecs(self.extended_generators),
            **self.counts(),
        }


def invariant_report(S: SystemSpec) -> InvariantReport:
    from .supports import generators_extended, support_lattice

    if S.k > MAX_ENUM_DIM:
        raise CapacityError(f"invariant report limited to k <= {MAX_ENUM_DIM}")
    lattice = support_lattice(S)
    return InvariantReport(
        idempotents=tuple(idempotents(S)),
        w_generators=solve_W(S).gens,
        minimal_of_W=tuple(minimal_elements(S, "W")),
        minimal_of_W_minus_V=tuple(minimal_elements(S, "W_minus_V")),
        supports=tuple(e.support for e in lattice.entries),
        extended_generators=generators_extended(S).gens,
    )


# counts preserved by isomorphisms: idempotents of M, atoms of W, and the
# algebraic-order minimal elements of W minus V
INTRINSIC_COUNTS = ("idempotent_count", "w_generator_count", "minimal_W_minus_V_count")


def distinguishing_invariants(r1: InvariantReport, r2: InvariantReport) -> list:
    """Names of the intrinsic counts on which two reports differ.

    A nonempty answer certifies that the presented monoids are not
    isomorphic; an empty one decides nothing.
    """
    c1, c2 = r1.counts(), r2.counts()
    return [name for name in INTRINSIC_COUNTS if c1[name] != c2[name]]
