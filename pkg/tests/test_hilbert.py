import itertools

import pytest
from hypothesis import given, settings, strategies as st

from helpers import GS, GS_DUAL, corpus, free_congruence, ineq, system
from dimmonoid import _backend
from dimmonoid.extnat import INF
from dimmonoid.hilbert import (
    GeneratorSet, brute_solutions, hilbert_basis, minimize, minimize_star, project_and_minimize,
    solve_V, solve_W,
)
from dimmonoid.order import submonoid_member
from dimmonoid.system import SystemSpec, dual, is_member

CORPUS = corpus()
BACKENDS = ["python"] + (["cython"] if _backend.BACKEND == "cython" else [])


def brute_hilbert(A, N, bound):
    """Minimal nonzero solutions of A x = 0 in {0..bound}^N, by enumeration."""
    sols = [
        x for x in itertools.product(range(bound + 1), repeat=N)
        if any(x) and all(sum(a * v for a, v in zip(row, x)) == 0 for row in A)
    ]
    sols.sort(key=sum)
    atoms = []
    for x in sols:
        if not any(all(a <= b for a, b in zip(y, x)) for y in atoms):
            atoms.append(x)
    return sorted(atoms)


# frozen from brute_hilbert
ORACLE = [
    (((1, -1),), 2, [(1, 1)]),
    (((1, -1, -1),), 3, [(1, 0, 1), (1, 1, 0)]),
    (((1, 1, -2),), 3, [(0, 2, 1), (1, 1, 1), (2, 0, 1)]),
    (((2, -1),), 2, [(1, 2)]),
    (((3, -2, 0), (0, 1, -1)), 3, [(2, 3, 3)]),
]


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("A,N,want", ORACLE)
def test_hilbert_basis_frozen(A, N, want, backend):
    assert sorted(hilbert_basis(A, N, backend=backend)) == want


@pytest.mark.parametrize("A,N,want", ORACLE)
def test_frozen_values_match_enumeration(A, N, want):
    assert brute_hilbert(A, N, 4) == want


@pytest.mark.parametrize("backend", BACKENDS)
def test_hilbert_basis_degenerate(backend):
    assert list(hilbert_basis([], 3, backend=backend)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert list(hilbert_basis([(0, 0)], backend=backend)) == [(0, 1), (1, 0)]
    assert list(hilbert_basis([(1, 1)], backend=backend)) == []
    with pytest.raises(ValueError):
        hilbert_basis([])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=1, max_size=2))
def test_hilbert_basis_against_enumeration(rows):
    got = sorted(hilbert_basis(rows, 3))
    # every basis element is a solution and the enumeration up to the
    # largest entry finds the same atoms
    bound = max([3] + [max(g) for g in got])
    assert brute_hilbert(rows, 3, bound) == got


def test_project_and_minimize():
    assert list(project_and_minimize([(1, 1, 0), (1, 0, 1)], 2)) == [(1, 0), (1, 1)]
    assert list(project_and_minimize([(2, 0, 1), (1, 1, 1), (0, 2, 1)], 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(project_and_minimize([], 2)) == []
    assert list(project_and_minimize([(0, 0, 5), (2, 2, 1), (1, 1, 0)], 2)) == [(1, 1)]


def test_minimize_variants():
    vs = [(1, 1), (1, 0), (INF, 0), (INF, INF), (2, 1)]
    assert list(minimize(vs, 2)) == [(1, 0), (1, 1), (INF, 0), (INF, INF)]
    assert list(minimize_star(vs, 2)) == [(1, 0), (1, 1)]
    m2 = [(1, 1), (INF, 0), (0, INF), (INF, INF)]
    assert list(minimize(m2, 2)) == [(1, 1), (0, INF), (INF, 0)]
    assert list(minimize_star(m2, 2)) == [(1, 1), (0, INF), (INF, 0)]


def test_generator_set():
    G = GeneratorSet(2, ((1, 1), (1, 0)))
    assert G.gens == ((1, 0), (1, 1))
    assert len(G) == 2 and (1, 1) in G and (0, 1) not in G
    assert str(G) == "(1,0)\n(1,1)"
    with pytest.raises(ValueError):
        GeneratorSet(3, ((1, 0),))


def test_solve_examples():
    assert list(solve_W(GS)) == [(1, 0), (1, 1)]
    assert list(solve_W(system(2, rows=[ineq((2, 0), (0, 1))]))) == [(1, 0), (1, 1), (1, 2)]
    assert list(solve_W(GS_DUAL)) == [(0, 1), (1, 1)]
    assert list(solve_V(GS)) == [(1, 1)]
    assert list(solve_V(free_congruence(3))) == [(1, 1), (0, 3), (3, 0)]
    assert list(solve_V(system(2, rows=[ineq((2, 0), (0, 1))]))) == [(1, 2)]
    assert list(solve_W(SystemSpec(2))) == [(0, 1), (1, 0)]
    assert list(solve_W(system(1, rows=[ineq((0,), (1,))]))) == []


def test_brute_solutions_examples():
    assert brute_solutions(GS, 2) == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
    assert brute_solutions(SystemSpec(1), 1) == [(0,), (1,)]
    even = system(2, cong=[((1, 0), 2), ((0, 1), 2)])
    assert brute_solutions(even, 2) == [(0, 0), (0, 2), (2, 0), (2, 2)]
    with pytest.raises(ValueError):
        brute_solutions(GS, -1)


@pytest.mark.parametrize("idx", range(len(CORPUS)))
def test_oracle_completeness_and_soundness(idx):
    S = CORPUS[idx]
    W = solve_W(S)
    top = max([1] + [max(g) for g in W])
    bound = min(3 * top, 9 if S.k == 3 else 14)
    for x in brute_solutions(S, bound):
        assert submonoid_member(x, W) is not None, x
    for g in W:
        assert g in brute_solutions(S, max(g))


@pytest.mark.parametrize("idx", range(len(CORPUS)))
def test_hilbert_minimality(idx):
    S = CORPUS[idx]
    W = list(solve_W(S))
    for g in W:
        below = [x for x in brute_solutions(S, max(g)) if any(x) and x != g]
        for x in below:
            rest = tuple(a - b for a, b in zip(g, x))
            assert not (min(rest) >= 0 and any(rest) and is_member(rest, S)), (g, x)


@pytest.mark.parametrize("idx", range(len(CORPUS)))
def test_v_inside_both_sides(idx):
    S = CORPUS[idx]
    W, WD = solve_W(S), solve_W(dual(S))
    for v in solve_V(S):
        assert submonoid_member(v, W) is not None
        assert submonoid_member(v, WD) is not None


@pytest.mark.parametrize("idx", range(len(CORPUS)))
def test_backends_agree_on_corpus(idx):
    S = CORPUS[idx]
    results = {b: (solve_W(S, backend=b), solve_V(S, backend=b)) for b in BACKENDS}
    assert len(set(results.values())) == 1


def test_output_is_deterministic():
    S = CORPUS[5]
    assert [solve_W(S).gens for _ in range(3)] == [solve_W(S).gens] * 3
