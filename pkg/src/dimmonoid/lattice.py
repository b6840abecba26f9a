"""Exact integer lattice utilities: Smith normal form with transforms and
the equation/congruence description of a lattice spanned by row vectors."""
from __future__ import annotations


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M):
    """Return ``(D, U, V)`` with ``U M V = D``, U and V unimodular, D
    diagonal with nonnegative entries each dividing the next.

    ``M`` is a list of integer rows (m x n); all matrices are lists of lists.
    """
    A = [list(r) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            pivots = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not pivots:
                break
            _, pi, pj = min(pivots)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean &= A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean &= A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return A, U, V


def matmul(X, Y):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*Y)] for row in X]


def lattice_description(vectors, k):
    """Describe the lattice L spanned by ``vectors`` inside Z^k.

    Returns ``(equations, congruences)``: integer rows c with ``c.x = 0``
    and pairs (c, d) with ``c.x = 0 mod d`` (d > 1) such that x in Z^k lies
    in L iff all of them hold.  Congruence coefficients are reduced to
    [0, d).
    """
    rows = [list(v) for v in vectors]
    if not rows:
        return [tuple(int(i == j) for i in range(k)) for j in range(k)], []
    D, _, V = smith_normal_form(rows)
    diag = [D[i][i] for i in range(min(len(D), k))]
    rank = sum(1 for d in diag if d)
    equations, congruences = [], []
    for j in range(k):
        col = tuple(V[i][j] for i in range(k))
        if j >= rank:
            equations.append(col)
        elif diag[j] > 1:
            d = diag[j]
            reduced = tuple(c % d for c in col)
            if any(reduced):
                congruences.append((reduced, d))
    return equations, congruences
