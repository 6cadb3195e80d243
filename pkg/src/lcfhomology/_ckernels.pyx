# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernels; same contract as ``_pykernels``."""
import numpy as np
from math import gcd

cimport cython


def rank_mod_p(rows, long long p):
    cdef long long[:, ::1] A
    if p >= 2 ** 31:
        from ._pykernels import rank_mod_p as slow
        return slow(rows, p)
    arr = np.asarray(rows, dtype=np.int64)
    if arr.size == 0:
        return 0
    A = np.ascontiguousarray(np.mod(arr, p))
    cdef Py_ssize_t m = A.shape[0]
    cdef Py_ssize_t n = A.shape[1]
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef long long inv, f, tmp
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if A[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(n):
                tmp = A[rank, j]
                A[rank, j] = A[piv, j]
                A[piv, j] = tmp
        inv = pow(int(A[rank, col]), int(p - 2), int(p))
        for j in range(col, n):
            A[rank, j] = (A[rank, j] * inv) % p
        for i in range(m):
            if i != rank and A[i, col] != 0:
                f = A[i, col]
                for j in range(col, n):
                    if A[rank, j] != 0:
                        A[i, j] = ((A[i, j] - f * A[rank, j]) % p + p) % p
        rank += 1
        if rank == m:
            break
    return rank


def rank_rational(rows):
    cdef list A = [[int(x) for x in row] for row in rows]
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(A[0]) if m else 0
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef object prev = 1, a, b
    cdef list row, prow
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if A[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        prow = A[rank]
        a = prow[col]
        for i in range(rank + 1, m):
            row = A[i]
            b = row[col]
            for j in range(col + 1, n):
                row[j] = (a * row[j] - b * prow[j]) // prev
            row[col] = 0
        prev = a
        rank += 1
        if rank == m:
            break
    return rank


def smith_diagonal(rows):
    cdef list A = [[int(x) for x in row] for row in rows]
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(A[0]) if m else 0
    cdef Py_ssize_t t = 0, i, j, bi, bj
    cdef object best, v, q, piv
    cdef list row, prow, diag = []
    cdef bint dirty, found
    while t < m and t < n:
        found = False
        best = 0
        bi = bj = 0
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (not found or abs(v) < best):
                    best = abs(v)
                    bi = i
                    bj = j
                    found = True
                    if best == 1:
                        break
            if found and best == 1:
                break
        if not found:
            break
        A[t], A[bi] = A[bi], A[t]
        if bj != t:
            for row in A:
                row[t], row[bj] = row[bj], row[t]
        while True:
            piv = A[t][t]
            dirty = False
            prow = A[t]
            for i in range(t + 1, m):
                row = A[i]
                v = row[t]
                if v:
                    q = v // piv
                    for j in range(t, n):
                        if prow[j]:
                            row[j] -= q * prow[j]
                    if row[t]:
                        dirty = True
            for j in range(t + 1, n):
                v = prow[j]
                if v:
                    q = v // piv
                    for row in A:
                        if row[t]:
                            row[j] -= q * row[t]
                    if prow[j]:
                        dirty = True
            if not dirty:
                break
            best = abs(A[t][t])
            bi = bj = t
            for i in range(t + 1, m):
                v = A[i][t]
                if v and abs(v) < best:
                    best = abs(v)
                    bi = i
                    bj = t
            for j in range(t + 1, n):
                v = A[t][j]
                if v and abs(v) < best:
                    best = abs(v)
                    bi = t
                    bj = j
            if bi != t:
                A[t], A[bi] = A[bi], A[t]
            if bj != t:
                for row in A:
                    row[t], row[bj] = row[bj], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return _divisibility_chain(diag)


def _divisibility_chain(list diag):
    cdef list d = list(diag)
    cdef Py_ssize_t k = len(d), i, j
    cdef object a, b, g
    for i in range(k):
        for j in range(i + 1, k):
            a = d[i]
            b = d[j]
            g = gcd(a, b)
            if g != a:
                d[i] = g
                d[j] = a // g * b
    return d
