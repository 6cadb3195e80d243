"""Pure-Python elimination kernels.

Reference implementations for the compiled module ``_ckernels``; both expose
the same three functions with the same semantics.
"""
from math import gcd


def rank_mod_p(rows, p):
    """Rank over F_p of an integer matrix given as a sequence of rows."""
    A = [[int(x) % p for x in row] for row in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    rank = 0
    for col in range(n):
        piv = None
        for i in range(rank, m):
            if A[i][col]:
                piv = i
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        prow = A[rank]
        inv = pow(prow[col], p - 2, p)
        for j in range(col, n):
            prow[j] = prow[j] * inv % p
        for i in range(m):
            if i != rank and A[i][col]:
                f = A[i][col]
                row = A[i]
                for j in range(col, n):
                    if prow[j]:
                        row[j] = (row[j] - f * prow[j]) % p
        rank += 1
        if rank == m:
            break
    return rank


def rank_rational(rows):
    """Exact rank over Q by fraction-free (Bareiss) elimination."""
    A = [[int(x) for x in row] for row in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(n):
        piv = None
        for i in range(rank, m):
            if A[i][col]:
                piv = i
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        a = A[rank][col]
        for i in range(rank + 1, m):
            b = A[i][col]
            row = A[i]
            prow = A[rank]
            for j in range(col + 1, n):
                row[j] = (a * row[j] - b * prow[j]) // prev
            row[col] = 0
        prev = a
        rank += 1
        if rank == m:
            break
    return rank


def smith_diagonal(rows):
    """Non-zero invariant factors of an integer matrix, each dividing the next.

    Diagonalises by unimodular row and column operations, then repairs the
    divisibility chain with gcd/lcm exchanges.
    """
    A = [[int(x) for x in row] for row in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        if j != t:
            for row in A:
                row[t], row[j] = row[j], row[t]
        while True:
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                v = A[i][t]
                if v:
                    q = v // piv
                    row, prow = A[i], A[t]
                    for j in range(t, n):
                        if prow[j]:
                            row[j] -= q * prow[j]
                    if row[t]:
                        dirty = True
            prow = A[t]
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
            # move the smallest remaining entry of row/column t to the pivot
            best = (abs(A[t][t]), t, t)
            for i in range(t + 1, m):
                v = A[i][t]
                if v and abs(v) < best[0]:
                    best = (abs(v), i, t)
            for j in range(t + 1, n):
                v = A[t][j]
                if v and abs(v) < best[0]:
                    best = (abs(v), t, j)
            _, i, j = best
            if i != t:
                A[t], A[i] = A[i], A[t]
            if j != t:
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return _divisibility_chain(diag)


def _divisibility_chain(diag):
    d = list(diag)
    k = len(d)
    for i in range(k):
        for j in range(i + 1, k):
            a, b = d[i], d[j]
            g = gcd(a, b)
            if g != a:
                d[i], d[j] = g, a // g * b
    return d
