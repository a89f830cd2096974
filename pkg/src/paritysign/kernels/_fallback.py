"""Pure-Python cut kernels.

Used when the compiled extension is unavailable (or forced via
PARITYSIGN_PURE=1).  Semantics are bit-for-bit identical to the Cython
module: same tie-breaks, same return values.
"""

from itertools import permutations
from math import comb

import numpy as np

# Below this subset count the plain loops beat numpy's per-call overhead.
_VECTOR_THRESHOLD = 4096
_CHUNK = 1 << 16


def _iter_k_subsets(n, k):
    """All n-bit masks with exactly k bits set, in increasing numeric order."""
    if k == 0:
        yield 0
        return
    limit = 1 << n
    mask = (1 << k) - 1
    while mask < limit:
        yield mask
        c = mask & -mask
        r = mask + c
        mask = (((r ^ mask) >> 2) // c) | r


def _cut_value(adj, mask, full):
    comp = full & ~mask
    total = 0
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        total += (adj[v] & comp).bit_count()
        m &= m - 1
    return total


def _mask_lex_smaller(a, b):
    # Sorted vertex lists of a and b compare by their smallest differing vertex.
    d = a ^ b
    if d == 0:
        return False
    return bool(a & (d & -d))


def _mask_chunks(n, k):
    buf = []
    append = buf.append
    for mask in _iter_k_subsets(n, k):
        append(mask)
        if len(buf) == _CHUNK:
            yield np.array(buf, dtype=np.uint64)
            buf.clear()
    if buf:
        yield np.array(buf, dtype=np.uint64)


def _chunk_cuts(masks, edges):
    one = np.uint64(1)
    vals = np.zeros(masks.shape, dtype=np.int64)
    for u, v in edges:
        vals += (((masks >> np.uint64(u)) ^ (masks >> np.uint64(v))) & one).astype(
            np.int64
        )
    return vals


def _lex_smallest_of_chunk(masks, n):
    # Reversing bit significance (vertex 0 most significant) turns lex order
    # on sorted vertex lists into reversed numeric order, so the lex-smallest
    # subset is the one with the largest reversed value.
    one = np.uint64(1)
    rev = np.zeros(masks.shape, dtype=np.uint64)
    for v in range(n):
        rev |= ((masks >> np.uint64(v)) & one) << np.uint64(n - 1 - v)
    return int(masks[int(rev.argmax())])


def min_balanced_cut(adj, n):
    """Minimum cut over all ceil(n/2)-subsets.

    Returns (value, odd_set_mask, subsets_examined); ties go to the
    lexicographically smallest vertex subset.
    """
    k = (n + 1) // 2
    full = (1 << n) - 1
    if comb(n, k) < _VECTOR_THRESHOLD:
        best = None
        best_mask = 0
        examined = 0
        for mask in _iter_k_subsets(n, k):
            examined += 1
            val = _cut_value(adj, mask, full)
            if best is None or val < best:
                best, best_mask = val, mask
            elif val == best and _mask_lex_smaller(mask, best_mask):
                best_mask = mask
        return best if best is not None else 0, best_mask, examined
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if (adj[i] >> j) & 1]
    best = None
    best_mask = 0
    examined = 0
    for masks in _mask_chunks(n, k):
        examined += len(masks)
        vals = _chunk_cuts(masks, edges)
        cmin = int(vals.min())
        if best is not None and cmin > best:
            continue
        cand = _lex_smallest_of_chunk(masks[vals == cmin], n)
        if best is None or cmin < best or _mask_lex_smaller(cand, best_mask):
            best, best_mask = cmin, cand
    return best if best is not None else 0, best_mask, examined


def cut_spectrum(adj, n):
    """Sorted list of every cut value achieved by a ceil(n/2)-subset."""
    k = (n + 1) // 2
    full = (1 << n) - 1
    if comb(n, k) < _VECTOR_THRESHOLD:
        seen = set()
        for mask in _iter_k_subsets(n, k):
            seen.add(_cut_value(adj, mask, full))
        return sorted(seen)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if (adj[i] >> j) & 1]
    seen = set()
    for masks in _mask_chunks(n, k):
        seen.update(np.unique(_chunk_cuts(masks, edges)).tolist())
    return sorted(seen)


def swap_descent(adj, n, start_mask):
    """Best-improvement descent over single cross-pair swaps.

    Swaps keep the class sizes fixed.  Ties among equally improving swaps
    go to the smallest (out-vertex, in-vertex) pair.  Returns
    (value, odd_set_mask, cuts_evaluated).
    """
    full = (1 << n) - 1
    mask = start_mask
    val = _cut_value(adj, mask, full)
    evals = 1
    while True:
        best_delta = 0
        best_swap = None
        for u in range(n):
            if not (mask >> u) & 1:
                continue
            for v in range(n):
                if (mask >> v) & 1:
                    continue
                cand = mask ^ (1 << u) ^ (1 << v)
                c = _cut_value(adj, cand, full)
                evals += 1
                if c - val < best_delta:
                    best_delta = c - val
                    best_swap = (u, v)
        if best_swap is None:
            return val, mask, evals
        u, v = best_swap
        mask ^= (1 << u) | (1 << v)
        val += best_delta


def _pair_index(n):
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    idx = {p: k for k, p in enumerate(pairs)}
    return pairs, idx


def pack_bits(adj, n):
    """Upper-triangle bitstring of the adjacency, packed MSB-first in
    column order (0,1),(0,2),(1,2),(0,3),..."""
    pairs, _ = _pair_index(n)
    bits = 0
    for i, j in pairs:
        bits = (bits << 1) | ((adj[i] >> j) & 1)
    return bits


def canonical_bits(adj, n):
    """Lexicographically smallest packed upper-triangle bitstring over all
    vertex permutations."""
    if n > 11:
        raise ValueError("canonical form supported only for n <= 11")
    pairs, _ = _pair_index(n)
    best = None
    for p in permutations(range(n)):
        bits = 0
        for i, j in pairs:
            bits = (bits << 1) | ((adj[p[i]] >> p[j]) & 1)
        if best is None or bits < best:
            best = bits
    return best if best is not None else 0


def canonical_bits_many(packed_list, n):
    """canonical_bits for a batch of packed upper-triangle bitstrings."""
    if n > 11:
        raise ValueError("canonical form supported only for n <= 11")
    if not packed_list:
        return []
    pairs, idx = _pair_index(n)
    m = len(pairs)
    if m == 0:
        return [0] * len(packed_list)
    arr = np.asarray(packed_list, dtype=np.int64)
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)
    bits = (arr[:, None] >> shifts[None, :]) & 1
    weights = np.int64(1) << shifts
    best = arr.copy()
    for p in permutations(range(n)):
        src = np.array(
            [idx[tuple(sorted((p[i], p[j])))] for i, j in pairs], dtype=np.intp
        )
        np.minimum(best, bits[:, src] @ weights, out=best)
    return best.tolist()
