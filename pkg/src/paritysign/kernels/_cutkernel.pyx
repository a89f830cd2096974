# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cut kernels: balanced-bipartition scans, swap descent, and
canonical upper-triangle bitstrings.

Mirrors _fallback.py exactly (same tie-breaks, same return values); the
Python layer picks whichever is importable.
"""

from itertools import permutations

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline long _cut(u64 *adj, int n, u64 mask, u64 full) nogil:
    cdef long total = 0
    cdef int v
    cdef u64 comp = full & ~mask
    for v in range(n):
        if (mask >> v) & 1:
            total += __builtin_popcountll(adj[v] & comp)
    return total


cdef u64 *_copy_adj(object adj, int n) except? NULL:
    cdef u64 *a = <u64 *> malloc((n if n > 0 else 1) * sizeof(u64))
    cdef int v
    if a == NULL:
        raise MemoryError()
    for v in range(n):
        a[v] = adj[v]
    return a


cdef inline u64 _next_k_subset(u64 mask) nogil:
    cdef u64 c = mask & (~mask + 1)
    cdef u64 r = mask + c
    return (((r ^ mask) >> 2) / c) | r


cdef inline bint _mask_lex_smaller(u64 a, u64 b) nogil:
    cdef u64 d = a ^ b
    if d == 0:
        return 0
    return (a & (d & (~d + 1))) != 0


def min_balanced_cut(adj, int n):
    """Minimum cut over all ceil(n/2)-subsets.

    Returns (value, odd_set_mask, subsets_examined); ties go to the
    lexicographically smallest vertex subset.
    """
    if n > 62:
        raise ValueError("cut kernels support n <= 62")
    cdef int k = (n + 1) // 2
    if k == 0:
        return 0, 0, 1
    cdef u64 full = ((<u64> 1) << n) - 1
    cdef u64 limit = (<u64> 1) << n
    cdef u64 mask = ((<u64> 1) << k) - 1
    cdef u64 best_mask = 0
    cdef long best = -1
    cdef long val
    cdef long examined = 0
    cdef u64 *a = _copy_adj(adj, n)
    try:
        with nogil:
            while mask < limit:
                examined += 1
                val = _cut(a, n, mask, full)
                if best < 0 or val < best:
                    best = val
                    best_mask = mask
                elif val == best and _mask_lex_smaller(mask, best_mask):
                    best_mask = mask
                mask = _next_k_subset(mask)
    finally:
        free(a)
    return best, best_mask, examined


def cut_spectrum(adj, int n):
    """Sorted list of every cut value achieved by a ceil(n/2)-subset."""
    if n > 62:
        raise ValueError("cut kernels support n <= 62")
    cdef int k = (n + 1) // 2
    if k == 0:
        return [0]
    cdef int v
    cdef long maxm = 0
    for v in range(n):
        maxm += adj[v].bit_count()
    maxm //= 2
    cdef char *seen = <char *> malloc(maxm + 1)
    cdef u64 *a = _copy_adj(adj, n)
    cdef u64 full = ((<u64> 1) << n) - 1
    cdef u64 limit = (<u64> 1) << n
    cdef u64 mask = ((<u64> 1) << k) - 1
    cdef long val, i
    if seen == NULL:
        free(a)
        raise MemoryError()
    try:
        with nogil:
            for i in range(maxm + 1):
                seen[i] = 0
            while mask < limit:
                val = _cut(a, n, mask, full)
                seen[val] = 1
                mask = _next_k_subset(mask)
        return [i for i in range(maxm + 1) if seen[i]]
    finally:
        free(a)
        free(seen)


def swap_descent(adj, int n, u64 start_mask):
    """Best-improvement descent over single cross-pair swaps.

    Returns (value, odd_set_mask, cuts_evaluated); swap ties go to the
    smallest (out-vertex, in-vertex) pair.
    """
    if n > 62:
        raise ValueError("cut kernels support n <= 62")
    cdef u64 full = ((<u64> 1) << n) - 1
    cdef u64 mask = start_mask
    cdef u64 cand
    cdef u64 *a = _copy_adj(adj, n)
    cdef long val, c, best_delta, evals = 1
    cdef int u, v, best_u, best_v, found
    try:
        with nogil:
            val = _cut(a, n, mask, full)
            while True:
                best_delta = 0
                found = 0
                best_u = 0
                best_v = 0
                for u in range(n):
                    if not (mask >> u) & 1:
                        continue
                    for v in range(n):
                        if (mask >> v) & 1:
                            continue
                        cand = mask ^ ((<u64> 1) << u) ^ ((<u64> 1) << v)
                        c = _cut(a, n, cand, full)
                        evals += 1
                        if c - val < best_delta:
                            best_delta = c - val
                            best_u = u
                            best_v = v
                            found = 1
                if not found:
                    break
                mask ^= ((<u64> 1) << best_u) | ((<u64> 1) << best_v)
                val += best_delta
    finally:
        free(a)
    return val, mask, evals


cdef _pairs(int n):
    return [(i, j) for j in range(1, n) for i in range(j)]


def pack_bits(adj, int n):
    """Upper-triangle bitstring of the adjacency, packed MSB-first in
    column order (0,1),(0,2),(1,2),(0,3),..."""
    cdef u64 bits = 0
    for i, j in _pairs(n):
        bits = (bits << 1) | ((adj[i] >> j) & 1)
    return bits


cdef void _perm_tables(int n, int *perm_buf, int *src_buf, int nperm, int m) except *:
    # perm_buf: nperm*n vertex images; src_buf: nperm*m source bit positions.
    pairs = _pairs(n)
    idx = {p: k for k, p in enumerate(pairs)}
    cdef int r = 0, k
    for p in permutations(range(n)):
        for k in range(n):
            perm_buf[r * n + k] = p[k]
        for k in range(m):
            i, j = pairs[k]
            a, b = p[i], p[j]
            if a > b:
                a, b = b, a
            src_buf[r * m + k] = idx[(a, b)]
        r += 1


def canonical_bits_many(packed_list, int n):
    """canonical_bits for a batch of packed upper-triangle bitstrings."""
    if n > 11:
        raise ValueError("canonical form supported only for n <= 11")
    cdef long count = len(packed_list)
    if count == 0:
        return []
    cdef int m = n * (n - 1) // 2
    if m == 0:
        return [0] * count
    cdef long nperm = 1
    cdef int i
    for i in range(2, n + 1):
        nperm *= i
    cdef int *perm_buf = <int *> malloc(nperm * n * sizeof(int))
    cdef int *src_buf = <int *> malloc(nperm * m * sizeof(int))
    cdef u64 *packed = <u64 *> malloc(count * sizeof(u64))
    cdef u64 *out = <u64 *> malloc(count * sizeof(u64))
    if perm_buf == NULL or src_buf == NULL or packed == NULL or out == NULL:
        free(perm_buf); free(src_buf); free(packed); free(out)
        raise MemoryError()
    cdef long g, r
    cdef int k
    cdef u64 bits, cand
    try:
        _perm_tables(n, perm_buf, src_buf, nperm, m)
        for g in range(count):
            packed[g] = packed_list[g]
        with nogil:
            for g in range(count):
                bits = packed[g]
                out[g] = bits
                for r in range(nperm):
                    cand = 0
                    for k in range(m):
                        cand = (cand << 1) | (
                            (bits >> (m - 1 - src_buf[r * m + k])) & 1
                        )
                    if cand < out[g]:
                        out[g] = cand
        return [out[g] for g in range(count)]
    finally:
        free(perm_buf)
        free(src_buf)
        free(packed)
        free(out)


def canonical_bits(adj, int n):
    """Lexicographically smallest packed upper-triangle bitstring over all
    vertex permutations."""
    return canonical_bits_many([pack_bits(adj, n)], n)[0]
