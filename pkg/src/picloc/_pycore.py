"""Pure-Python reference kernels.

Every function here has a twin in ``_ccore.pyx`` that runs the same
algorithm on checked 64-bit integers.  Both must return identical results;
the compiled one raises ``OverflowError`` when an intermediate value leaves
the int64 range, and the dispatcher in :mod:`picloc.kernels` then falls
back to these.

Matrices are lists of row lists of Python ints.
"""

from itertools import permutations, product


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def snf(a, nrows, ncols, left=True, right=True):
    """Smith normal form ``U @ A @ V == D``.

    Pivot: smallest nonzero absolute value in the active submatrix, first in
    row-major order.  Quotients use floor division.  Returns ``(U, D, V)``
    with ``U``/``V`` set to ``None`` when not requested.
    """
    A = [list(r) for r in a]
    U = identity(nrows) if left else None
    V = identity(ncols) if right else None

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        if U is not None:
            U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        if V is not None:
            for row in V:
                row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        rd, rs = A[dst], A[src]
        for k in range(ncols):
            if rs[k]:
                rd[k] += q * rs[k]
        if U is not None:
            ud, us = U[dst], U[src]
            for k in range(nrows):
                if us[k]:
                    ud[k] += q * us[k]

    def add_col(dst, src, q):
        for row in A:
            if row[src]:
                row[dst] += q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    t = 0
    size = min(nrows, ncols)
    while t < size:
        best = None
        bestval = 0
        for i in range(t, nrows):
            row = A[i]
            for j in range(t, ncols):
                x = row[j]
                if x and (best is None or abs(x) < bestval):
                    best = (i, j)
                    bestval = abs(x)
                    if bestval == 1:
                        break
            if bestval == 1:
                break
        if best is None:
            break
        if best[0] != t:
            swap_rows(t, best[0])
        if best[1] != t:
            swap_cols(t, best[1])

        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, nrows):
                x = A[i][t]
                if x:
                    q = x // p
                    if q:
                        add_row(i, t, -q)
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, ncols):
                x = A[t][j]
                if x:
                    q = x // p
                    if q:
                        add_col(j, t, -q)
                    if A[t][j]:
                        clean = False
            if not clean:
                # smallest remainder in column t, then in row t
                bi, bj, bv = t, t, abs(A[t][t])
                for i in range(t + 1, nrows):
                    x = A[i][t]
                    if x and abs(x) < bv:
                        bi, bj, bv = i, t, abs(x)
                for j in range(t + 1, ncols):
                    x = A[t][j]
                    if x and abs(x) < bv:
                        bi, bj, bv = t, j, abs(x)
                if bi != t:
                    swap_rows(t, bi)
                if bj != t:
                    swap_cols(t, bj)
                continue
            bad = None
            for i in range(t + 1, nrows):
                row = A[i]
                for j in range(t + 1, ncols):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        t += 1
    return U, A, V


def hnf(a, nrows, ncols):
    """Row-style Hermite normal form of the row lattice; zero rows dropped.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    """
    A = [list(r) for r in a]
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        found = False
        while True:
            piv = -1
            pv = 0
            for i in range(r, nrows):
                x = A[i][c]
                if x and (piv < 0 or abs(x) < pv):
                    piv, pv = i, abs(x)
            if piv < 0:
                break
            found = True
            if piv != r:
                A[r], A[piv] = A[piv], A[r]
            p = A[r][c]
            clean = True
            for i in range(r + 1, nrows):
                x = A[i][c]
                if x:
                    q = x // p
                    ri, rr = A[i], A[r]
                    for k in range(c, ncols):
                        ri[k] -= q * rr[k]
                    if ri[c]:
                        clean = False
            if clean:
                break
        if not found:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        p = A[r][c]
        rr = A[r]
        for i in range(r):
            q = A[i][c] // p
            if q:
                ri = A[i]
                for k in range(c, ncols):
                    ri[k] -= q * rr[k]
        r += 1
    return A[:r]


def _popcount(x):
    return bin(x).count("1")


def canonical_form(mask, n):
    """Canonical representative of a complex given as a face bitmask.

    Bit ``s`` of ``mask`` is set when the vertex subset ``s`` is a face.
    Vertices are ordered by the per-size counts of faces containing them
    (descending); the result is the smallest image over all orderings that
    only permute vertices with equal counts.
    """
    faces = [s for s in range(1 << n) if (mask >> s) & 1]
    keys = []
    for v in range(n):
        key = 0
        for s in faces:
            if (s >> v) & 1 and _popcount(s) >= 2:
                key += 1 << (4 * (n - _popcount(s)))
        keys.append(key)
    order = sorted(range(n), key=lambda v: -keys[v])
    groups = []
    for v in order:
        if groups and keys[groups[-1][0]] == keys[v]:
            groups[-1].append(v)
        else:
            groups.append([v])
    best = None
    for choice in product(*(permutations(g) for g in groups)):
        pos = [0] * n
        k = 0
        for g in choice:
            for v in g:
                pos[v] = k
                k += 1
        image = 0
        for s in faces:
            t = 0
            for v in range(n):
                if (s >> v) & 1:
                    t |= 1 << pos[v]
            image |= 1 << t
        if best is None or image < best:
            best = image
    return best


def canonical_complexes(n):
    """Sorted canonical masks of all complexes on ``n`` vertices (n <= 6)
    in which every singleton is a face, one per isomorphism class."""
    if not 0 <= n <= 6:
        raise ValueError("n must lie in 0..6")
    subsets = sorted((s for s in range(1 << n) if _popcount(s) >= 2),
                     key=lambda s: (_popcount(s), s))
    base = 1
    for v in range(n):
        base |= 1 << (1 << v)
    seen = set()
    m = len(subsets)
    stack = [(0, base)]
    while stack:
        i, mask = stack.pop()
        if i == m:
            seen.add(canonical_form(mask, n))
            continue
        s = subsets[i]
        stack.append((i + 1, mask))
        ok = True
        if _popcount(s) > 2:
            x = s
            while x:
                b = x & -x
                x ^= b
                if not (mask >> (s ^ b)) & 1:
                    ok = False
                    break
        if ok:
            stack.append((i + 1, mask | (1 << s)))
    return sorted(seen)
