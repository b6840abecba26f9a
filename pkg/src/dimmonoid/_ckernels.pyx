# cython: language_level=3, boundscheck=False, wraparound=False, overflowcheck=True
"""Compiled twins of the kernels in ``_pykernels``.

Arithmetic is on C ``long long`` with overflow checking; an overflow raises
``OverflowError`` and the dispatcher in ``_backend`` reruns the call on the
unbounded pure-Python path.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef long long i64


cdef bint _dominates(i64[:, ::1] basis, Py_ssize_t nb, i64[::1] y, Py_ssize_t N):
    cdef Py_ssize_t b, t
    for b in range(nb):
        for t in range(N):
            if y[t] < basis[b, t]:
                break
        else:
            return True
    return False


def completion(rows, Py_ssize_t N):
    cdef Py_ssize_t r = len(rows)
    cdef Py_ssize_t i, j, t, f, q, nf, nb, cap, npend, cnt
    cdef Py_ssize_t[::1] pend
    cdef i64 dot, s
    if r == 0:
        return [tuple(row) for row in np.eye(N, dtype=np.int64).tolist()]
    cdef i64[:, ::1] cols = np.ascontiguousarray(np.array(rows, dtype=np.int64).T)
    cdef i64[:, ::1] fx = np.eye(N, dtype=np.int64)
    cdef i64[:, ::1] fax = np.ascontiguousarray(np.array(cols, dtype=np.int64))
    cdef i64[:, ::1] basis = np.zeros((max(N, 4), N), dtype=np.int64)
    cdef i64[:, ::1] nx
    cdef i64[:, ::1] nax
    cdef i64[::1] y = np.zeros(N, dtype=np.int64)
    cdef bint zero
    nb = 0
    nf = N
    out = []
    while nf > 0:
        # accept solutions of this level
        pending = []
        for f in range(nf):
            zero = True
            for i in range(r):
                if fax[f, i] != 0:
                    zero = False
                    break
            if zero:
                if nb == basis.shape[0]:
                    grown = np.zeros((2 * nb, N), dtype=np.int64)
                    grown[:nb] = basis
                    basis = grown
                basis[nb, :] = fx[f, :]
                nb += 1
                out.append(tuple(np.asarray(fx[f, :]).tolist()))
            else:
                pending.append(f)
        cap = max(1, len(pending) * N)
        nx = np.empty((cap, N), dtype=np.int64)
        nax = np.empty((cap, r), dtype=np.int64)
        seen = set()
        cnt = 0
        npend = len(pending)
        pend = np.array(pending, dtype=np.intp)
        for q in range(npend):
            f = pend[q]
            for j in range(N):
                dot = 0
                for i in range(r):
                    dot += fax[f, i] * cols[j, i]
                if dot >= 0:
                    continue
                for t in range(N):
                    y[t] = fx[f, t]
                y[j] += 1
                key = bytes(np.asarray(y))
                if key in seen:
                    continue
                if _dominates(basis, nb, y, N):
                    continue
                seen.add(key)
                for t in range(N):
                    nx[cnt, t] = y[t]
                for i in range(r):
                    s = fax[f, i] + cols[j, i]
                    nax[cnt, i] = s
                cnt += 1
        fx = nx
        fax = nax
        nf = cnt
    return out


def span_table(gens, bounds):
    cdef Py_ssize_t k = len(bounds)
    cdef Py_ssize_t i, t, g, idx, size
    cdef i64[::1] bnd = np.array(bounds, dtype=np.int64)
    cdef i64[::1] strides = np.ones(max(k, 1), dtype=np.int64)
    for i in range(k - 2, -1, -1):
        strides[i] = strides[i + 1] * (bnd[i + 1] + 1)
    size = strides[0] * (bnd[0] + 1) if k else 1
    usable = [tuple(v) for v in gens
              if any(v) and all(0 <= v[t] <= bounds[t] for t in range(k))]
    cdef Py_ssize_t ng = len(usable)
    cdef i64[:, ::1] G = np.array(usable, dtype=np.int64).reshape(ng, k)
    cdef i64[::1] offs = np.zeros(max(ng, 1), dtype=np.int64)
    for g in range(ng):
        for t in range(k):
            offs[g] += G[g, t] * strides[t]
    cdef cnp.uint8_t[::1] table = np.zeros(size, dtype=np.uint8)
    cdef i64[::1] coords = np.zeros(max(k, 1), dtype=np.int64)
    cdef bint ok
    table[0] = 1
    for idx in range(1, size):
        i = k - 1
        while True:
            coords[i] += 1
            if coords[i] <= bnd[i]:
                break
            coords[i] = 0
            i -= 1
        for g in range(ng):
            if not table[idx - offs[g]]:
                continue
            ok = True
            for t in range(k):
                if coords[t] < G[g, t]:
                    ok = False
                    break
            if ok:
                table[idx] = 1
                break
    return bytearray(np.asarray(table).tobytes())
