# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops. Mirrors ``_pykernels`` function for function."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint16_t, int64_t
from libc.stdlib cimport malloc, calloc, free

cnp.import_array()

ctypedef uint16_t sym_t


cdef inline Py_ssize_t _shift_mismatch(const sym_t* u, Py_ssize_t n, Py_ssize_t s) noexcept nogil:
    # positions j with u[j] != u[(j + s) mod n]
    cdef Py_ssize_t j, cnt = 0, m = n - s
    for j in range(m):
        cnt += u[j] != u[j + s]
    for j in range(m, n):
        cnt += u[j] != u[j + s - n]
    return cnt


cdef inline Py_ssize_t _self_distance(const sym_t* u, Py_ssize_t n) noexcept nogil:
    # d(u, u_s) == d(u, u_{n-s}), so half the shifts suffice
    cdef Py_ssize_t s, cur, best = n
    for s in range(1, n // 2 + 1):
        cur = _shift_mismatch(u, n, s)
        if cur < best:
            best = cur
            if best == 0:
                break
    return best


cdef inline bint _far_from_all(const sym_t* code, Py_ssize_t size, const sym_t* u,
                               Py_ssize_t n, Py_ssize_t d) noexcept nogil:
    cdef Py_ssize_t i, j, cnt
    cdef const sym_t* c
    for i in range(size):
        c = code + i * n
        cnt = 0
        for j in range(n):
            cnt += c[j] != u[j]
            if cnt >= d:
                break
        if cnt < d:
            return False
    return True


def cyclic_distances(const sym_t[:, ::1] words):
    cdef Py_ssize_t m = words.shape[0], n = words.shape[1], k
    out = np.empty(m, dtype=np.int64)
    cdef int64_t[::1] o = out
    if m == 0:
        return out
    with nogil:
        for k in range(m):
            o[k] = _self_distance(&words[k, 0], n)
    return out


def distance_histogram(Py_ssize_t n, Py_ssize_t q):
    cdef Py_ssize_t j, total = 1, k
    for j in range(n):
        total *= q
    hist = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] h = hist
    cdef sym_t* u = <sym_t*>calloc(n, sizeof(sym_t))
    if u == NULL:
        raise MemoryError()
    try:
        with nogil:
            for k in range(total):
                h[_self_distance(u, n)] += 1
                # odometer, last symbol fastest (lexicographic order)
                j = n - 1
                while j >= 0:
                    u[j] += 1
                    if u[j] < q:
                        break
                    u[j] = 0
                    j -= 1
    finally:
        free(u)
    return hist


def greedy_extend(sym_t[:, ::1] code, Py_ssize_t size, const sym_t[:, ::1] cands,
                  Py_ssize_t d, bint check_rotations):
    cdef Py_ssize_t m = cands.shape[0], n = cands.shape[1]
    cdef Py_ssize_t k, r, j, na = 0
    cdef bint ok
    if code.shape[0] < size + m * n:
        raise ValueError("code buffer too small")
    accepted = np.empty(m, dtype=np.int64)
    cdef int64_t[::1] acc = accepted
    cdef sym_t* rot = <sym_t*>malloc(max(n, 1) * sizeof(sym_t))
    cdef const sym_t* u
    if rot == NULL:
        raise MemoryError()
    try:
        with nogil:
            for k in range(m):
                u = &cands[k, 0]
                if check_rotations:
                    ok = True
                    for r in range(n):
                        for j in range(n):
                            rot[j] = u[(j + r) % n]
                        if not _far_from_all(&code[0, 0], size, rot, n, d):
                            ok = False
                            break
                else:
                    ok = _far_from_all(&code[0, 0], size, u, n, d)
                if ok:
                    for r in range(n):
                        for j in range(n):
                            code[size + r, j] = u[(j + r) % n]
                    size += n
                    acc[na] = k
                    na += 1
    finally:
        free(rot)
    return size, accepted[:na].copy()


def min_pairwise_distance(const sym_t[:, ::1] words):
    cdef Py_ssize_t m = words.shape[0], n = words.shape[1]
    cdef Py_ssize_t i, k, j, cnt, best = n + 1, bi = -1, bk = -1
    cdef const sym_t* a
    cdef const sym_t* b
    with nogil:
        for i in range(m):
            a = &words[i, 0]
            for k in range(i + 1, m):
                b = &words[k, 0]
                cnt = 0
                for j in range(n):
                    cnt += a[j] != b[j]
                    if cnt >= best:
                        break
                if cnt < best:
                    best = cnt
                    bi = i
                    bk = k
    return int(best), int(bi), int(bk)


def max_autocorrelation(const sym_t[:, ::1] words):
    cdef Py_ssize_t m = words.shape[0], n = words.shape[1]
    cdef Py_ssize_t i, s, cur, best = -1, bi = -1, bs = -1
    with nogil:
        for i in range(m):
            for s in range(1, n // 2 + 1):
                cur = n - _shift_mismatch(&words[i, 0], n, s)
                if cur > best:
                    best = cur
                    bi = i
                    bs = s
    return int(best), int(bi), int(bs)


def max_crosscorrelation(const sym_t[:, ::1] words):
    cdef Py_ssize_t m = words.shape[0], n = words.shape[1]
    cdef Py_ssize_t i, k, t, j, cur, best = -1, bi = -1, bk = -1, bt = -1
    cdef const sym_t* x
    cdef const sym_t* y
    with nogil:
        for i in range(m):
            x = &words[i, 0]
            for k in range(i + 1, m):
                y = &words[k, 0]
                for t in range(n):
                    cur = 0
                    for j in range(n - t):
                        cur += x[j] == y[j + t]
                    for j in range(n - t, n):
                        cur += x[j] == y[j + t - n]
                    if cur > best:
                        best = cur
                        bi = i
                        bk = k
                        bt = t
    return int(best), int(bi), int(bk), int(bt)
