# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pycore``.

All arithmetic is on int64 with overflow checks; any overflow raises
``OverflowError`` so the caller can retry with Python integers.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport malloc, realloc, free, qsort
from libc.string cimport memset

cdef extern from *:
    """
    #include <stdint.h>
    static inline int pl_mul(int64_t a, int64_t b, int64_t *r) {
        return __builtin_mul_overflow(a, b, r) || *r == INT64_MIN;
    }
    static inline int pl_add(int64_t a, int64_t b, int64_t *r) {
        return __builtin_add_overflow(a, b, r) || *r == INT64_MIN;
    }
    static inline int64_t pl_fdiv(int64_t a, int64_t b) {
        int64_t q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) q--;
        return q;
    }
    static inline int64_t pl_fmod(int64_t a, int64_t b) {
        int64_t r = a % b;
        if (r != 0 && ((r < 0) != (b < 0))) r += b;
        return r;
    }
    static inline int64_t pl_abs(int64_t a) { return a < 0 ? -a : a; }
    static inline int pl_popcount(uint64_t x) { return __builtin_popcountll(x); }
    static int pl_cmp_u64(const void *a, const void *b) {
        uint64_t x = *(const uint64_t *)a, y = *(const uint64_t *)b;
        return (x > y) - (x < y);
    }
    """
    int pl_mul(int64_t a, int64_t b, int64_t *r)
    int pl_add(int64_t a, int64_t b, int64_t *r)
    int64_t pl_fdiv(int64_t a, int64_t b)
    int64_t pl_fmod(int64_t a, int64_t b)
    int64_t pl_abs(int64_t a)
    int pl_popcount(uint64_t x)
    int pl_cmp_u64(const void *a, const void *b) nogil
    int64_t INT64_MIN


cdef int64_t* _load(rows, Py_ssize_t nr, Py_ssize_t nc) except NULL:
    cdef Py_ssize_t n = nr * nc if nr * nc > 0 else 1
    cdef int64_t* m = <int64_t*> malloc(n * sizeof(int64_t))
    cdef Py_ssize_t i, j
    cdef int64_t v
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nr):
            row = rows[i]
            for j in range(nc):
                v = row[j]
                if v == INT64_MIN:
                    raise OverflowError("int64 minimum is not accepted")
                m[i * nc + j] = v
    except BaseException:
        free(m)
        raise
    return m


cdef int64_t* _eye(Py_ssize_t n) except NULL:
    cdef int64_t* m = <int64_t*> malloc((n * n if n > 0 else 1) * sizeof(int64_t))
    cdef Py_ssize_t i
    if m == NULL:
        raise MemoryError()
    memset(m, 0, (n * n if n > 0 else 1) * sizeof(int64_t))
    for i in range(n):
        m[i * n + i] = 1
    return m


cdef list _dump(int64_t* m, Py_ssize_t nr, Py_ssize_t nc):
    cdef Py_ssize_t i, j
    return [[m[i * nc + j] for j in range(nc)] for i in range(nr)]


cdef int _axpy(int64_t* d, int64_t* s, Py_ssize_t n, Py_ssize_t stride,
               int64_t q) except -1:
    # d += q * s, both strided
    cdef Py_ssize_t k
    cdef int64_t t
    for k in range(n):
        if s[k * stride] != 0:
            if pl_mul(q, s[k * stride], &t) or pl_add(d[k * stride], t, &d[k * stride]):
                raise OverflowError("int64 overflow")
    return 0


cdef void _swap(int64_t* a, int64_t* b, Py_ssize_t n, Py_ssize_t stride):
    cdef Py_ssize_t k
    cdef int64_t t
    for k in range(n):
        t = a[k * stride]
        a[k * stride] = b[k * stride]
        b[k * stride] = t


cdef int _snf(int64_t* A, int64_t* U, int64_t* V,
              Py_ssize_t nr, Py_ssize_t nc) except -1:
    cdef Py_ssize_t t = 0, size = nr if nr < nc else nc
    cdef Py_ssize_t i, j, bi, bj, bad
    cdef int64_t x, p, q, bv
    cdef bint clean, found
    while t < size:
        found = False
        bv = 0
        bi = bj = 0
        for i in range(t, nr):
            for j in range(t, nc):
                x = A[i * nc + j]
                if x != 0 and (not found or pl_abs(x) < bv):
                    found = True
                    bi, bj, bv = i, j, pl_abs(x)
                    if bv == 1:
                        break
            if found and bv == 1:
                break
        if not found:
            break
        if bi != t:
            _swap(A + t * nc, A + bi * nc, nc, 1)
            if U != NULL:
                _swap(U + t * nr, U + bi * nr, nr, 1)
        if bj != t:
            _swap(A + t, A + bj, nr, nc)
            if V != NULL:
                _swap(V + t, V + bj, nc, nc)
        while True:
            p = A[t * nc + t]
            clean = True
            for i in range(t + 1, nr):
                x = A[i * nc + t]
                if x != 0:
                    q = pl_fdiv(x, p)
                    if q != 0:
                        _axpy(A + i * nc, A + t * nc, nc, 1, -q)
                        if U != NULL:
                            _axpy(U + i * nr, U + t * nr, nr, 1, -q)
                    if A[i * nc + t] != 0:
                        clean = False
            for j in range(t + 1, nc):
                x = A[t * nc + j]
                if x != 0:
                    q = pl_fdiv(x, p)
                    if q != 0:
                        _axpy(A + j, A + t, nr, nc, -q)
                        if V != NULL:
                            _axpy(V + j, V + t, nc, nc, -q)
                    if A[t * nc + j] != 0:
                        clean = False
            if not clean:
                bi, bj, bv = t, t, pl_abs(A[t * nc + t])
                for i in range(t + 1, nr):
                    x = A[i * nc + t]
                    if x != 0 and pl_abs(x) < bv:
                        bi, bj, bv = i, t, pl_abs(x)
                for j in range(t + 1, nc):
                    x = A[t * nc + j]
                    if x != 0 and pl_abs(x) < bv:
                        bi, bj, bv = t, j, pl_abs(x)
                if bi != t:
                    _swap(A + t * nc, A + bi * nc, nc, 1)
                    if U != NULL:
                        _swap(U + t * nr, U + bi * nr, nr, 1)
                if bj != t:
                    _swap(A + t, A + bj, nr, nc)
                    if V != NULL:
                        _swap(V + t, V + bj, nc, nc)
                continue
            bad = -1
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if pl_fmod(A[i * nc + j], p) != 0:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            _axpy(A + t * nc, A + bad * nc, nc, 1, 1)
            if U != NULL:
                _axpy(U + t * nr, U + bad * nr, nr, 1, 1)
        if A[t * nc + t] < 0:
            for j in range(nc):
                A[t * nc + j] = -A[t * nc + j]
            if U != NULL:
                for j in range(nr):
                    U[t * nr + j] = -U[t * nr + j]
        t += 1
    return 0


def snf(a, Py_ssize_t nrows, Py_ssize_t ncols, bint left=True, bint right=True):
    cdef int64_t* A = _load(a, nrows, ncols)
    cdef int64_t* U = NULL
    cdef int64_t* V = NULL
    try:
        if left:
            U = _eye(nrows)
        if right:
            V = _eye(ncols)
        _snf(A, U, V, nrows, ncols)
        return (_dump(U, nrows, nrows) if left else None,
                _dump(A, nrows, ncols),
                _dump(V, ncols, ncols) if right else None)
    finally:
        free(A)
        if U != NULL:
            free(U)
        if V != NULL:
            free(V)


def hnf(a, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef int64_t* A = _load(a, nrows, ncols)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t x, p, q, pv
    cdef bint found, clean
    try:
        for c in range(ncols):
            if r == nrows:
                break
            found = False
            while True:
                piv = -1
                pv = 0
                for i in range(r, nrows):
                    x = A[i * ncols + c]
                    if x != 0 and (piv < 0 or pl_abs(x) < pv):
                        piv, pv = i, pl_abs(x)
                if piv < 0:
                    break
                found = True
                if piv != r:
                    _swap(A + r * ncols, A + piv * ncols, ncols, 1)
                p = A[r * ncols + c]
                clean = True
                for i in range(r + 1, nrows):
                    x = A[i * ncols + c]
                    if x != 0:
                        q = pl_fdiv(x, p)
                        _axpy(A + i * ncols + c, A + r * ncols + c, ncols - c, 1, -q)
                        if A[i * ncols + c] != 0:
                            clean = False
                if clean:
                    break
            if not found:
                continue
            if A[r * ncols + c] < 0:
                for j in range(ncols):
                    A[r * ncols + j] = -A[r * ncols + j]
            p = A[r * ncols + c]
            for i in range(r):
                q = pl_fdiv(A[i * ncols + c], p)
                if q != 0:
                    _axpy(A + i * ncols + c, A + r * ncols + c, ncols - c, 1, -q)
            r += 1
        return _dump(A, r, ncols)
    finally:
        free(A)


# ---- complex enumeration ------------------------------------------------

cdef struct _Enum:
    int n
    int nsub
    uint64_t subs[64]
    uint64_t* out
    Py_ssize_t count
    Py_ssize_t cap


cdef struct _Canon:
    int n
    int nfaces
    uint64_t faces[64]
    int grp_of_pos[6]
    int grp_start[6]
    int grp_end[6]
    int vert_grp[6]
    int pos[6]
    int used[6]
    uint64_t best


cdef void _canon_leaf(_Canon* c):
    cdef uint64_t img[64]
    cdef uint64_t image = 0
    cdef int s, low, k
    img[0] = 0
    for s in range(1, 1 << c.n):
        low = 0
        while not ((s >> low) & 1):
            low += 1
        img[s] = img[s & (s - 1)] | ((<uint64_t> 1) << c.pos[low])
    for k in range(c.nfaces):
        image |= (<uint64_t> 1) << img[c.faces[k]]
    if image < c.best:
        c.best = image


cdef void _canon_rec(_Canon* c, int k):
    # assign position k to an unused vertex of the group owning k
    cdef int v, g
    if k == c.n:
        _canon_leaf(c)
        return
    g = c.grp_of_pos[k]
    for v in range(c.n):
        if not c.used[v] and c.vert_grp[v] == g:
            c.used[v] = 1
            c.pos[v] = k
            _canon_rec(c, k + 1)
            c.used[v] = 0


cdef uint64_t _canonical(uint64_t mask, int n):
    cdef _Canon c
    cdef uint64_t keys[6]
    cdef int order[6]
    cdef int s, v, i, j, t, g, pc
    cdef uint64_t kv
    c.n = n
    c.nfaces = 0
    for s in range(1 << n):
        if (mask >> s) & 1:
            c.faces[c.nfaces] = s
            c.nfaces += 1
    for v in range(n):
        kv = 0
        for i in range(c.nfaces):
            s = <int> c.faces[i]
            pc = pl_popcount(s)
            if (s >> v) & 1 and pc >= 2:
                kv += (<uint64_t> 1) << (4 * (n - pc))
        keys[v] = kv
        order[v] = v
    # stable insertion sort by key descending
    for i in range(1, n):
        t = order[i]
        j = i - 1
        while j >= 0 and keys[order[j]] < keys[t]:
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = t
    g = -1
    for i in range(n):
        if i == 0 or keys[order[i]] != keys[order[i - 1]]:
            g += 1
        c.grp_of_pos[i] = g
        c.vert_grp[order[i]] = g
        c.used[i] = 0
    c.best = <uint64_t> -1
    if c.nfaces == 0:
        return 0
    _canon_rec(&c, 0)
    return c.best


cdef int _push(_Enum* e, uint64_t v) except -1:
    cdef uint64_t* p
    if e.count == e.cap:
        e.cap = e.cap * 2 if e.cap else 1024
        p = <uint64_t*> realloc(e.out, e.cap * sizeof(uint64_t))
        if p == NULL:
            raise MemoryError()
        e.out = p
    e.out[e.count] = v
    e.count += 1
    return 0


cdef int _enum_rec(_Enum* e, int i, uint64_t mask) except -1:
    cdef uint64_t s, x, b
    cdef bint ok
    if i == e.nsub:
        _push(e, _canonical(mask, e.n))
        if e.count >= 1 << 16:
            _compact(e)
        return 0
    s = e.subs[i]
    _enum_rec(e, i + 1, mask)
    ok = True
    if pl_popcount(s) > 2:
        x = s
        while x:
            b = x & (~x + 1)
            x ^= b
            if not ((mask >> (s ^ b)) & 1):
                ok = False
                break
    if ok:
        _enum_rec(e, i + 1, mask | ((<uint64_t> 1) << s))
    return 0


cdef void _compact(_Enum* e):
    cdef Py_ssize_t i, k = 0
    if e.count == 0:
        return
    qsort(e.out, e.count, sizeof(uint64_t), pl_cmp_u64)
    for i in range(e.count):
        if k == 0 or e.out[i] != e.out[k - 1]:
            e.out[k] = e.out[i]
            k += 1
    e.count = k


def canonical_form(mask, int n):
    return _canonical(<uint64_t> mask, n)


def canonical_complexes(int n):
    cdef _Enum e
    cdef int s, k, i
    cdef uint64_t base = 1
    if n < 0 or n > 6:
        raise ValueError("n must lie in 0..6")
    e.n = n
    e.nsub = 0
    e.out = NULL
    e.count = 0
    e.cap = 0
    for k in range(2, n + 1):
        for s in range(1 << n):
            if pl_popcount(s) == k:
                e.subs[e.nsub] = s
                e.nsub += 1
    for i in range(n):
        base |= (<uint64_t> 1) << (1 << i)
    try:
        _enum_rec(&e, 0, base)
        _compact(&e)
        return [e.out[i] for i in range(e.count)]
    finally:
        free(e.out)
