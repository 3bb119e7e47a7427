# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-rank enumeration kernel.

Same contract as _whitney_py.rank_signed_counts, restricted to inputs whose
Bareiss intermediates fit 64-bit values (products are taken in 128 bits; the
caller checks the Hadamard bound before choosing this kernel).
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef long long int128 "__int128"


cdef struct Work:
    long long *rows     # nrows * width, row-major
    long long *piv      # (cap + 1) * width scratch + adopted pivots
    int *pivcol
    long long *denom    # denom[0] = 1 sentinel
    long long *counts
    int nrows
    int width
    int cap


cdef void dfs(Work *w, int i, int npiv, long long sign) noexcept:
    cdef int t, j, c, lead
    cdef long long vc, d, prev
    cdef long long *v
    cdef long long *p
    if i == w.nrows:
        w.counts[npiv] += sign
        return
    dfs(w, i + 1, npiv, sign)
    v = w.piv + npiv * w.width
    p = w.rows + i * w.width
    for t in range(w.width):
        v[t] = p[t]
    for j in range(npiv):
        p = w.piv + j * w.width
        c = w.pivcol[j]
        d = w.denom[j + 1]
        prev = w.denom[j]
        vc = v[c]
        for t in range(w.width):
            v[t] = <long long> (((<int128> d) * v[t] - (<int128> vc) * p[t]) / prev)
    lead = -1
    for t in range(w.width):
        if v[t] != 0:
            lead = t
            break
    if lead < 0:
        dfs(w, i + 1, npiv, -sign)
    else:
        w.pivcol[npiv] = lead
        w.denom[npiv + 1] = v[lead]
        dfs(w, i + 1, npiv + 1, -sign)


def rank_signed_counts(rows, int width):
    """counts[r] = sum over all subsets B of rows of (-1)^|B| with rank(B) = r."""
    cdef int nrows = len(rows)
    cdef int cap = width if width < nrows else nrows
    cdef Work w
    cdef int i, t
    cdef object row
    if nrows > 30:
        raise ValueError("subset enumeration over more than 2^30 subsets refused")
    w.nrows = nrows
    w.width = width
    w.cap = cap
    w.rows = <long long *> malloc(nrows * width * sizeof(long long))
    w.piv = <long long *> malloc((cap + 1) * width * sizeof(long long))
    w.pivcol = <int *> malloc((cap + 1) * sizeof(int))
    w.denom = <long long *> malloc((cap + 2) * sizeof(long long))
    w.counts = <long long *> malloc((cap + 1) * sizeof(long long))
    if w.rows == NULL or w.piv == NULL or w.pivcol == NULL or w.denom == NULL or w.counts == NULL:
        free(<void *> w.rows)
        free(<void *> w.piv)
        free(<void *> w.pivcol)
        free(<void *> w.denom)
        free(<void *> w.counts)
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            if len(row) != width:
                raise ValueError("row width mismatch")
            for t in range(width):
                w.rows[i * width + t] = row[t]
        w.denom[0] = 1
        for i in range(cap + 1):
            w.counts[i] = 0
        dfs(&w, 0, 0, 1)
        return [w.counts[i] for i in range(cap + 1)]
    finally:
        free(<void *> w.rows)
        free(<void *> w.piv)
        free(<void *> w.pivcol)
        free(<void *> w.denom)
        free(<void *> w.counts)
