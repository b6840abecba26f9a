"""Named systems and a seeded random corpus shared by the test modules."""
import itertools
import random

from dimmonoid.extnat import INF, canonical_sorted, inf_scale, is_finite, vec_add
from dimmonoid.system import Classification, SystemSpec, classify


def ineq(a, b):
    return (tuple(a), tuple(b))


def eq(a, b):
    return [ineq(a, b), ineq(b, a)]


def system(k, cong=(), rows=(), unit=None):
    return SystemSpec(k, tuple(cong), tuple(rows), unit)


GS = system(2, rows=[ineq((1, 0), (0, 1))], unit=(1, 1))
GS_DUAL = system(2, rows=[ineq((0, 1), (1, 0))], unit=(1, 1))


def free_congruence(n):
    """x + (n-1) y in n N0*; vacuous for n = 1."""
    cong = [((1, n - 1), n)] if n >= 2 else []
    return system(2, cong=cong, unit=(1, 1))


EQ2 = {
    "M0": system(2, rows=eq((1, 0), (0, 1)), unit=(1, 1)),
    "M1": system(2, rows=eq((1, 1), (0, 2)), unit=(1, 1)),
    "M1'": system(2, rows=eq((1, 1), (2, 0)), unit=(1, 1)),
    "M2": system(2, rows=eq((2, 1), (1, 2)), unit=(1, 1)),
}

EQ2_LISTED_GENS = {  # generators with coefficients in N0*
    "M0": [(1, 1)],
    "M1": [(1, 1), (0, INF)],
    "M1'": [(1, 1), (INF, 0)],
    "M2": [(1, 1), (INF, 0), (0, INF)],
}


def oriented(case, n):
    cong = [((1, n - 1), n)] if n >= 2 else []
    rows = {
        "i": [ineq((1, 0), (0, 1))],
        "ii": [ineq((2, 1), (1, 2))],
        "iii": [ineq((1, 1), (0, 2))],
        "iv": eq((2, 0), (1, 1)) + [ineq((1, 0), (0, 1))],
    }[case]
    if case == "iv":
        cong = []
    return system(2, cong=cong, rows=rows, unit=(1, 1))


def slope(n):
    return system(2, rows=[ineq((n, 0), (0, 1))], unit=(1, n))


def named_systems():
    out = {"GS": GS, "GS_dual": GS_DUAL}
    for n in range(1, 6):
        out[f"free{n}"] = free_congruence(n)
    out.update({f"eq2_{name}": S for name, S in EQ2.items()})
    for case in ("i", "ii", "iii", "iv"):
        for n in (1, 2, 3):
            out[f"oriented_{case}_{n}"] = oriented(case, n)
    for n in (1, 2, 3):
        out[f"slope{n}"] = slope(n)
    return out


def star_span(gens):
    """Generators g and INF*g: the N0*-span written with finite multiplicities."""
    out = set()
    for g in gens:
        out.add(tuple(g))
        out.add(inf_scale(g))
    return canonical_sorted(out)


def find_unit(S, bound=6):
    for u in itertools.product(range(1, bound + 1), repeat=S.k):
        if classify(u, S) is Classification.V:
            return u
    return None


def random_system(rng):
    k = rng.randint(1, 3)
    coef = lambda: tuple(rng.randint(0, 3) for _ in range(k))  # noqa: E731
    cong = [(coef(), rng.randint(2, 4)) for _ in range(rng.randint(0, 2))]
    rows = [(coef(), coef()) for _ in range(rng.randint(0, 2))]
    S = SystemSpec(k, tuple(cong), tuple(rows))
    u = find_unit(S)
    return S.with_unit(u) if u is not None else S


def random_unit_system(rng):
    """Rows drawn until the chosen unit is an element of M n D(M)."""
    k = rng.randint(2, 3)
    u = tuple(rng.randint(1, 3) for _ in range(k))
    coef = lambda: tuple(rng.randint(0, 3) for _ in range(k))  # noqa: E731
    dot = lambda r: sum(a * b for a, b in zip(r, u))  # noqa: E731
    cong = []
    for _ in range(rng.randint(0, 2)):
        while True:
            d, m = coef(), rng.randint(2, 4)
            if dot(d) % m == 0:
                cong.append((d, m))
                break
    rows = []
    for _ in range(rng.randint(1, 2)):
        while True:
            a, b = coef(), coef()
            if a != b and dot(a) == dot(b):
                rows.append((a, b))
                break
    return SystemSpec(k, tuple(cong), tuple(rows), u)


def corpus(size=30, seed=20261014):
    """Half free random systems, half anchored on an order unit."""
    rng = random.Random(seed)
    return [random_system(rng) if i % 2 == 0 else random_unit_system(rng) for i in range(size)]


def ext_sum(decomposition, k):
    total = (0,) * k
    for g, mult in decomposition.items():
        for _ in range(mult):
            total = vec_add(total, g)
    return total


def finite_only(vs):
    return [v for v in vs if is_finite(v)]
