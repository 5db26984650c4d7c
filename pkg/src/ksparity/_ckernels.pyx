# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_pykernels`` exactly."""

import numpy as np
from libc.stdint cimport uint64_t, int32_t, uint8_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXB = 128
    MAXR = 64

MAX_BASES = MAXB
MAX_RAYS = MAXR


cdef struct Ctx:
    int32_t br[MAXB][4]
    uint64_t full[MAXR][2]
    uint64_t rm[MAXR][2]
    uint64_t sel0
    uint64_t sel1
    int chosen[MAXB]
    int depth


cdef inline int popc2(uint64_t a, uint64_t b) nogil:
    return __builtin_popcountll(a) + __builtin_popcountll(b)


cdef int _load(Ctx* c, int32_t[:, ::1] basis_rays, int n_rays) except -1:
    cdef int nb = basis_rays.shape[0]
    cdef int b, k, r
    if nb > MAXB or n_rays > MAXR:
        raise ValueError("system too large for the compiled kernels")
    for r in range(n_rays):
        c.full[r][0] = 0
        c.full[r][1] = 0
    for b in range(nb):
        for k in range(4):
            r = basis_rays[b, k]
            c.br[b][k] = r
            if b < 64:
                c.full[r][0] |= (<uint64_t>1) << b
            else:
                c.full[r][1] |= (<uint64_t>1) << (b - 64)
    return 0


cdef inline void _restrict(Ctx* c, int n_rays, uint64_t s0, uint64_t s1) nogil:
    cdef int r
    c.sel0 = s0
    c.sel1 = s1
    c.depth = 0
    for r in range(n_rays):
        c.rm[r][0] = c.full[r][0] & s0
        c.rm[r][1] = c.full[r][1] & s1


cdef bint _dfs(Ctx* c, uint64_t cov0, uint64_t cov1) nogil:
    cdef uint64_t rem0 = c.sel0 & ~cov0
    cdef uint64_t rem1 = c.sel1 & ~cov1
    cdef uint64_t w
    cdef int b, k, r, cnt, best = -1, best_cnt = 5, word
    if rem0 == 0 and rem1 == 0:
        return True
    for word in range(2):
        w = rem0 if word == 0 else rem1
        while w:
            b = __builtin_ctzll(w) + 64 * word
            w &= w - 1
            cnt = 0
            for k in range(4):
                r = c.br[b][k]
                if (c.rm[r][0] & cov0) == 0 and (c.rm[r][1] & cov1) == 0:
                    cnt += 1
            if cnt < best_cnt:
                best = b
                best_cnt = cnt
                if cnt <= 1:
                    break
        if best_cnt <= 1:
            break
    if best_cnt == 0:
        return False
    for k in range(4):
        r = c.br[best][k]
        if (c.rm[r][0] & cov0) == 0 and (c.rm[r][1] & cov1) == 0:
            c.chosen[c.depth] = r
            c.depth += 1
            if _dfs(c, cov0 | c.rm[r][0], cov1 | c.rm[r][1]):
                return True
            c.depth -= 1
    return False


def find_coloring(basis_rays, int n_rays, sel_words):
    cdef Ctx c
    cdef int32_t[:, ::1] br = np.ascontiguousarray(basis_rays, dtype=np.int32)
    _load(&c, br, n_rays)
    _restrict(&c, n_rays, <uint64_t>int(sel_words[0]), <uint64_t>int(sel_words[1]))
    if _dfs(&c, 0, 0):
        return sorted(c.chosen[i] for i in range(c.depth))
    return None


def critical_flags(basis_rays, int n_rays, proofs):
    cdef Ctx c
    cdef int32_t[:, ::1] br = np.ascontiguousarray(basis_rays, dtype=np.int32)
    cdef uint64_t[:, ::1] pv = np.ascontiguousarray(proofs, dtype=np.uint64).reshape(-1, 2)
    cdef Py_ssize_t i, n = pv.shape[0]
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef uint8_t[::1] out = out_arr
    cdef uint64_t s0, s1, w, low
    cdef bint ok
    cdef int word
    _load(&c, br, n_rays)
    with nogil:
        for i in range(n):
            s0 = pv[i, 0]
            s1 = pv[i, 1]
            ok = True
            for word in range(2):
                w = s0 if word == 0 else s1
                while w and ok:
                    low = w & (~w + 1)
                    w ^= low
                    if word == 0:
                        _restrict(&c, n_rays, s0 ^ low, s1)
                    else:
                        _restrict(&c, n_rays, s0, s1 ^ low)
                    if not _dfs(&c, 0, 0):
                        ok = False
            out[i] = ok
    return out_arr


def odd_span(gens):
    cdef uint64_t[:, ::1] g = np.ascontiguousarray(gens, dtype=np.uint64).reshape(-1, 2)
    cdef int k = g.shape[0]
    cdef int j
    cdef bint any_odd = False
    for j in range(k):
        if popc2(g[j, 0], g[j, 1]) & 1:
            any_odd = True
    if not any_odd:
        return np.zeros((0, 2), dtype=np.uint64)
    if k > 40:
        raise ValueError("span too large to materialize")
    out_arr = np.empty(((<uint64_t>1) << (k - 1), 2), dtype=np.uint64)
    cdef uint64_t[:, ::1] out = out_arr
    cdef uint64_t i, total = (<uint64_t>1) << k
    cdef uint64_t v0 = 0, v1 = 0
    cdef Py_ssize_t n = 0
    with nogil:
        for i in range(1, total):
            j = __builtin_ctzll(i)
            v0 ^= g[j, 0]
            v1 ^= g[j, 1]
            if popc2(v0, v1) & 1:
                out[n, 0] = v0
                out[n, 1] = v1
                n += 1
    return out_arr[:n]


def weight_histogram(gens):
    cdef uint64_t[:, ::1] g = np.ascontiguousarray(gens, dtype=np.uint64).reshape(-1, 2)
    cdef int k = g.shape[0]
    if k > 48:
        raise ValueError("span too large to walk")
    hist_arr = np.zeros(MAXB + 1, dtype=np.int64)
    cdef long long[::1] hist = hist_arr
    cdef uint64_t i, total = (<uint64_t>1) << k
    cdef uint64_t v0 = 0, v1 = 0
    cdef int j
    hist[0] = 1
    with nogil:
        for i in range(1, total):
            j = __builtin_ctzll(i)
            v0 ^= g[j, 0]
            v1 ^= g[j, 1]
            hist[popc2(v0, v1)] += 1
    return hist_arr
