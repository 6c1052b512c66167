# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled matching enumeration kernel; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef void _rec(int n, int depth, char* used, int* lows, int* highs,
               int cross, int nest, list out):
    cdef int a = 0, b, t, d, dc, dn
    while a < n and used[a]:
        a += 1
    if a == n:
        flat = []
        for t in range(depth):
            flat.append(lows[t])
            flat.append(highs[t])
        out.append((tuple(flat), cross, nest))
        return
    used[a] = 1
    lows[depth] = a
    for b in range(a + 1, n):
        if used[b]:
            continue
        dc = 0
        dn = 0
        for t in range(depth):
            d = highs[t]
            if d > a:
                if d < b:
                    dc += 1
                else:
                    dn += 1
        used[b] = 1
        highs[depth] = b
        _rec(n, depth + 1, used, lows, highs, cross + dc, nest + dn, out)
        used[b] = 0
    used[a] = 0


def matching_table(int k):
    cdef int n = 2 * k
    cdef int i
    cdef char* used = <char*> malloc(max(n, 1) * sizeof(char))
    cdef int* lows = <int*> malloc(max(k, 1) * sizeof(int))
    cdef int* highs = <int*> malloc(max(k, 1) * sizeof(int))
    out = []
    try:
        for i in range(n):
            used[i] = 0
        _rec(n, 0, used, lows, highs, 0, 0, out)
    finally:
        free(used)
        free(lows)
        free(highs)
    return tuple(out)


cdef void _hist(int n, int depth, char* used, int* highs,
                int cross, int nest, long long* acc):
    cdef int a = 0, b, t, d, dc, dn
    while a < n and used[a]:
        a += 1
    if a == n:
        if cross & 1:
            acc[cross + nest] -= 1
        else:
            acc[cross + nest] += 1
        return
    used[a] = 1
    for b in range(a + 1, n):
        if used[b]:
            continue
        dc = 0
        dn = 0
        for t in range(depth):
            d = highs[t]
            if d > a:
                if d < b:
                    dc += 1
                else:
                    dn += 1
        used[b] = 1
        highs[depth] = b
        _hist(n, depth + 1, used, highs, cross + dc, nest + dn, acc)
        used[b] = 0
    used[a] = 0


def lambda_sign_histogram(int k):
    cdef int n = 2 * k
    cdef int top = k * (k - 1) // 2 + 1
    cdef int i
    cdef char* used = <char*> malloc(max(n, 1) * sizeof(char))
    cdef int* highs = <int*> malloc(max(k, 1) * sizeof(int))
    cdef long long* acc = <long long*> malloc(top * sizeof(long long))
    try:
        for i in range(n):
            used[i] = 0
        for i in range(top):
            acc[i] = 0
        _hist(n, 0, used, highs, 0, 0, acc)
        return {i: acc[i] for i in range(top) if acc[i] != 0}
    finally:
        free(used)
        free(highs)
        free(acc)
