# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: 4^n assignment enumeration, subset DP, permutation search.

Mirrors batlb._pure; batlb.backend picks whichever is importable.  All
accumulators are 64-bit integers and stay exact within the documented
input limits (n <= 12 for moment sums, n <= 24 for the DP).
"""

from libc.stdlib cimport free, malloc

BACKEND_NAME = "native"


cdef inline int _weight6(int mv, int lv, int hv) nogil:
    if mv == lv and lv == hv:
        return 0
    if lv == hv:
        return -2
    if mv == lv or mv == hv:
        return 1
    if (lv < mv and mv < hv) or (hv < mv and mv < lv):
        return 4
    return -2


def moment_power_sums(int n, int[::1] mids, int[::1] los, int[::1] his):
    """Sums of (W, W^2, W^4) over all 4^n class assignments; W is 6-scaled.

    Walks the assignments with a base-4 odometer and delta-evaluates W:
    a digit change only re-scores the constraints touching that variable.
    """
    cdef Py_ssize_t m = mids.shape[0]
    cdef long long count = 1
    cdef int i
    for i in range(n):
        count *= 4
    cdef int cap = n if n > 0 else 1
    cdef int *dig = <int *> malloc(cap * sizeof(int))
    # CSR of constraint indices touching each variable (3 entries per constraint)
    cdef int *tstart = <int *> malloc((n + 1) * sizeof(int))
    cdef int *tidx = <int *> malloc((3 * m if m > 0 else 1) * sizeof(int))
    cdef int *w = <int *> malloc((m if m > 0 else 1) * sizeof(int))
    if dig == NULL or tstart == NULL or tidx == NULL or w == NULL:
        free(dig); free(tstart); free(tidx); free(w)
        raise MemoryError()
    cdef long long s1 = 0, s2 = 0, s4 = 0, q, total = 0, t2
    cdef Py_ssize_t p
    cdef int d, j, c
    try:
        for i in range(n + 1):
            tstart[i] = 0
        for p in range(m):
            tstart[mids[p] + 1] += 1
            tstart[los[p] + 1] += 1
            tstart[his[p] + 1] += 1
        for i in range(n):
            tstart[i + 1] += tstart[i]
        # fill using a moving cursor, then restore tstart
        for p in range(m):
            tidx[tstart[mids[p]]] = <int> p; tstart[mids[p]] += 1
            tidx[tstart[los[p]]] = <int> p; tstart[los[p]] += 1
            tidx[tstart[his[p]]] = <int> p; tstart[his[p]] += 1
        for i in range(n, 0, -1):
            tstart[i] = tstart[i - 1]
        tstart[0] = 0
        for i in range(n):
            dig[i] = 0
        for p in range(m):
            w[p] = _weight6(dig[mids[p]], dig[los[p]], dig[his[p]])
            total += w[p]
        for q in range(count):
            t2 = total * total
            s1 += total
            s2 += t2
            s4 += t2 * t2
            d = 0
            while d < n:
                for j in range(tstart[d], tstart[d + 1]):
                    c = tidx[j]
                    total -= w[c]
                dig[d] = 0 if dig[d] == 3 else dig[d] + 1
                for j in range(tstart[d], tstart[d + 1]):
                    c = tidx[j]
                    w[c] = _weight6(dig[mids[c]], dig[los[c]], dig[his[c]])
                    total += w[c]
                if dig[d] == 0:
                    d += 1
                else:
                    break
    finally:
        free(dig)
        free(tstart)
        free(tidx)
        free(w)
    return s1, s2, s4


def brute_best(int n, int[::1] mids, int[::1] los, int[::1] his):
    """Exhaustive search over all n! position vectors, lex-smallest tie-break."""
    cdef Py_ssize_t m = mids.shape[0]
    cdef int *p = <int *> malloc((n if n > 0 else 1) * sizeof(int))
    cdef int *bp = <int *> malloc((n if n > 0 else 1) * sizeof(int))
    if p == NULL or bp == NULL:
        if p != NULL:
            free(p)
        if bp != NULL:
            free(bp)
        raise MemoryError()
    cdef int i, j, tmp, pm, pa, pb
    cdef int best = -1, count
    cdef bint running = True
    for i in range(n):
        p[i] = i + 1
        bp[i] = i + 1
    if n == 0:
        free(p)
        free(bp)
        return 0, []
    try:
        while running:
            count = 0
            for i in range(m):
                pm = p[mids[i]]
                pa = p[los[i]]
                pb = p[his[i]]
                if (pa < pm and pm < pb) or (pb < pm and pm < pa):
                    count += 1
            if count > best:
                best = count
                for i in range(n):
                    bp[i] = p[i]
            # next lexicographic permutation of p
            i = n - 2
            while i >= 0 and p[i] >= p[i + 1]:
                i -= 1
            if i < 0:
                running = False
            else:
                j = n - 1
                while p[j] <= p[i]:
                    j -= 1
                tmp = p[i]; p[i] = p[j]; p[j] = tmp
                j = n - 1
                i += 1
                while i < j:
                    tmp = p[i]; p[i] = p[j]; p[j] = tmp
                    i += 1
                    j -= 1
        out = [bp[i] for i in range(n)]
    finally:
        free(p)
        free(bp)
    return best, out


def dp_best(int n, int[::1] starts, int[::1] ca, int[::1] cb):
    """Subset DP over placement prefixes; see batlb._pure.dp_best."""
    if n == 0:
        return 0, []
    cdef long long full = (<long long> 1) << n
    cdef int *g = <int *> malloc(full * sizeof(int))
    if g == NULL:
        raise MemoryError()
    cdef long long subset, sup
    cdef int v, j, credit, cand, best
    g[full - 1] = 0
    try:
        for subset in range(full - 2, -1, -1):
            best = 0
            for v in range(n):
                if subset & ((<long long> 1) << v):
                    continue
                credit = 0
                for j in range(starts[v], starts[v + 1]):
                    credit += <int> (((subset >> ca[j]) ^ (subset >> cb[j])) & 1)
                cand = credit + g[subset | ((<long long> 1) << v)]
                if cand > best:
                    best = cand
            g[subset] = best
        order = []
        subset = 0
        while subset != full - 1:
            for v in range(n):
                sup = subset | ((<long long> 1) << v)
                if sup == subset:
                    continue
                credit = 0
                for j in range(starts[v], starts[v + 1]):
                    credit += <int> (((subset >> ca[j]) ^ (subset >> cb[j])) & 1)
                if credit + g[sup] == g[subset]:
                    order.append(v)
                    subset = sup
                    break
        opt = g[0]
    finally:
        free(g)
    return opt, order
