"""Pure-Python kernels. Always available; unbounded integers throughout."""


def completion(rows, N):
    """Minimal nonzero solutions of ``rows . x = 0`` in N0^N.

    Contejean-Devie completion: grow candidates one unit vector at a time,
    only in directions e_j with <A x, A e_j> < 0, discard candidates that
    dominate an accepted solution, accept when A x = 0.
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(N)) for j in range(N)]
    cols = [tuple(r[j] for r in rows) for j in range(N)]
    basis = []
    frontier = {}
    for j in range(N):
        x = [0] * N
        x[j] = 1
        frontier[tuple(x)] = cols[j]
    while frontier:
        pending = []
        for x, ax in frontier.items():
            if any(ax):
                pending.append((x, ax))
            else:
                basis.append(x)
        fresh = len(basis)
        nxt = {}
        for x, ax in pending:
            for j in range(N):
                cj = cols[j]
                if sum(p * q for p, q in zip(ax, cj)) >= 0:
                    continue
                y = list(x)
                y[j] += 1
                y = tuple(y)
                if y in nxt:
                    continue
                if _dominates_any(y, basis, fresh):
                    continue
                nxt[y] = tuple(p + q for p, q in zip(ax, cj))
        frontier = nxt
    return basis


def _dominates_any(y, basis, upto):
    for i in range(upto):
        b = basis[i]
        if all(p >= q for p, q in zip(y, b)):
            return True
    return False


def span_table(gens, bounds):
    """Membership table of the monoid generated by nonnegative integer
    vectors ``gens`` inside the box prod [0, bounds[i]].

    Cells are indexed in mixed radix with the last coordinate fastest.
    """
    k = len(bounds)
    strides = [1] * k
    for i in range(k - 2, -1, -1):
        strides[i] = strides[i + 1] * (bounds[i + 1] + 1)
    size = strides[0] * (bounds[0] + 1) if k else 1
    table = bytearray(size)
    table[0] = 1
    usable = [g for g in gens if any(g) and all(0 <= g[i] <= bounds[i] for i in range(k))]
    offsets = [sum(g[i] * strides[i] for i in range(k)) for g in usable]
    coords = [0] * k
    for idx in range(1, size):
        # advance mixed-radix counter to idx
        i = k - 1
        while True:
            coords[i] += 1
            if coords[i] <= bounds[i]:
                break
            coords[i] = 0
            i -= 1
        for g, off in zip(usable, offsets):
            if table[idx - off] and all(coords[t] >= g[t] for t in range(k)):
                table[idx] = 1
                break
    return table
