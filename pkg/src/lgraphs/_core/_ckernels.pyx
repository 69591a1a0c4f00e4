# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Behaviour mirrors ``_pykernels`` exactly."""

from libc.stdlib cimport malloc, free, calloc
from libc.string cimport memset

DEF FOUND = 0
DEF EXHAUSTED = 1
DEF BUDGET = 2

ctypedef unsigned long long u64


cdef inline Py_ssize_t _upper(int* a, Py_ssize_t lo, Py_ssize_t hi, int key) nogil:
    # first index in a[lo:hi] with a[idx] > key
    cdef Py_ssize_t mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] <= key:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline bint _member(int* a, Py_ssize_t lo, Py_ssize_t hi, int key) nogil:
    cdef Py_ssize_t mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] < key:
            lo = mid + 1
        elif a[mid] > key:
            hi = mid
        else:
            return True
    return False


def find_witness(order, adj):
    cdef Py_ssize_t n = len(order)
    cdef Py_ssize_t m2 = 0
    cdef Py_ssize_t p, i, j, idx, e, s, t
    cdef int k, mj
    if n < 4:
        return None
    pos = [0] * n
    for p in range(n):
        pos[order[p]] = p
    rows = []
    for p in range(n):
        r = sorted([pos[u] for u in adj[order[p]]])
        rows.append(r)
        m2 += len(r)
    cdef int* start = <int*> malloc((n + 1) * sizeof(int))
    cdef int* nb = <int*> malloc((m2 + 1) * sizeof(int))
    if start == NULL or nb == NULL:
        free(start); free(nb)
        raise MemoryError()
    e = 0
    for p in range(n):
        start[p] = e
        for k in rows[p]:
            nb[e] = k
            e += 1
    start[n] = e
    cdef bint hit = False
    cdef int wi = 0, wj = 0, wk = 0, wl = 0
    try:
        with nogil:
            for i in range(n):
                s = start[i]; t = start[i + 1]
                if s == t or nb[t - 1] <= i + 1:
                    continue
                for j in range(i + 1, n):
                    if start[j] == start[j + 1]:
                        continue
                    mj = nb[start[j + 1] - 1]
                    if mj <= j + 1:
                        continue
                    idx = _upper(nb, s, t, <int> j)
                    while idx < t:
                        k = nb[idx]
                        if k >= mj:
                            break
                        if not _member(nb, start[j], start[j + 1], k):
                            hit = True
                            wi = <int> i; wj = <int> j; wk = k
                            wl = nb[_upper(nb, start[j], start[j + 1], k)]
                            break
                        idx += 1
                    if hit:
                        break
                if hit:
                    break
    finally:
        free(start)
        free(nb)
    if hit:
        return (wi, wj, wk, wl)
    return None


cdef struct SearchState:
    int n
    u64* mask
    int* order
    long long nodes
    long long budget
    bint prune
    int first


cdef bint _dead(SearchState* st, int p, int v, u64 placed) nogil:
    cdef u64 earlier = st.mask[v] & placed
    cdef u64 full, outside
    cdef int a, j, u
    if earlier == 0:
        return False
    a = 0
    while not ((earlier >> st.order[a]) & 1):
        a += 1
    full = (<u64> 1 << st.n) - 1 if st.n < 64 else <u64> 0xFFFFFFFFFFFFFFFF
    outside = full & ~(placed | (<u64> 1 << v))
    for j in range(a + 1, p):
        u = st.order[j]
        if not ((st.mask[u] >> v) & 1) and (st.mask[u] & outside):
            return True
    return False


cdef bint _full_ok(SearchState* st) nogil:
    # brute-force check of a complete order
    cdef int n = st.n
    cdef int i, j, k, l
    for i in range(n):
        for k in range(i + 2, n):
            if not ((st.mask[st.order[i]] >> st.order[k]) & 1):
                continue
            for j in range(i + 1, k):
                if (st.mask[st.order[j]] >> st.order[k]) & 1:
                    continue
                for l in range(k + 1, n):
                    if (st.mask[st.order[j]] >> st.order[l]) & 1:
                        return False
    return True


cdef int _rec(SearchState* st, int p, u64 placed) nogil:
    cdef int v, lo, hi, r
    if p == st.n:
        return FOUND
    lo = 0
    hi = st.n
    if p == 0 and st.first >= 0:
        lo = st.first
        hi = st.first + 1
    for v in range(lo, hi):
        if (placed >> v) & 1:
            continue
        if st.prune and _dead(st, p, v, placed):
            continue
        st.nodes += 1
        if st.nodes > st.budget:
            return BUDGET
        st.order[p] = v
        if not st.prune and p == st.n - 1:
            if not _full_ok(st):
                continue
        r = _rec(st, p + 1, placed | (<u64> 1 << v))
        if r != EXHAUSTED:
            return r
    return EXHAUSTED


def search_first(int n, nbmask, long long budget, int first=-1, bint prune=True):
    cdef SearchState st
    cdef int v, status
    if n == 0:
        return FOUND, [], 0
    if n > 64:
        raise ValueError("search kernel supports at most 64 vertices")
    st.n = n
    st.mask = <u64*> malloc(n * sizeof(u64))
    st.order = <int*> calloc(n, sizeof(int))
    st.nodes = 0
    st.budget = budget
    st.prune = prune
    st.first = first
    for v in range(n):
        st.mask[v] = <u64> nbmask[v]
    try:
        with nogil:
            status = _rec(&st, 0, 0)
        order = [st.order[v] for v in range(n)] if status == FOUND else None
        return status, order, st.nodes
    finally:
        free(st.mask)
        free(st.order)


cdef void _count_rec(SearchState* st, int p, u64 placed, long long* checked,
                     long long* good, int* first_order, bint* have_first) nogil:
    cdef int v
    if p == st.n:
        checked[0] += 1
        if _full_ok(st):
            good[0] += 1
            if not have_first[0]:
                have_first[0] = True
                for v in range(st.n):
                    first_order[v] = st.order[v]
        return
    for v in range(st.n):
        if not ((placed >> v) & 1):
            st.order[p] = v
            _count_rec(st, p + 1, placed | (<u64> 1 << v), checked, good,
                       first_order, have_first)


def count_all(int n, nbmask):
    cdef SearchState st
    cdef long long checked = 0, good = 0
    cdef bint have_first = False
    cdef int v
    if n > 64:
        raise ValueError("count kernel supports at most 64 vertices")
    st.n = n
    st.mask = <u64*> malloc((n + 1) * sizeof(u64))
    st.order = <int*> calloc(n + 1, sizeof(int))
    cdef int* first_order = <int*> calloc(n + 1, sizeof(int))
    for v in range(n):
        st.mask[v] = <u64> nbmask[v]
    try:
        with nogil:
            _count_rec(&st, 0, 0, &checked, &good, first_order, &have_first)
        first = [first_order[v] for v in range(n)] if have_first else None
        return checked, good, first
    finally:
        free(st.mask)
        free(st.order)
        free(first_order)


cdef inline void _fen_add(long* tree, Py_ssize_t n, Py_ssize_t i, long d) nogil:
    i += 1
    while i <= n:
        tree[i] += d
        i += i & -i


cdef inline long _fen_prefix(long* tree, Py_ssize_t i) nogil:
    cdef long s = 0
    while i > 0:
        s += tree[i]
        i -= i & -i
    return s


cdef inline Py_ssize_t _fen_kth(long* tree, Py_ssize_t n, int log, long k) nogil:
    cdef Py_ssize_t pos = 0, nxt
    cdef int b
    for b in range(log, -1, -1):
        nxt = pos + (<Py_ssize_t> 1 << b)
        if nxt <= n and tree[nxt] < k:
            pos = nxt
            k -= tree[nxt]
    return pos


cdef inline Py_ssize_t _lower_l(long* a, Py_ssize_t n, long key) nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline Py_ssize_t _upper_l(long* a, Py_ssize_t n, long key) nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] <= key:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _event_key(e):
    return e[:5]


def sweep(hs, vs, long long limit):
    cdef Py_ssize_t nh = len(hs), nv = len(vs)
    cdef long long cap
    cdef Py_ssize_t s, i, lo, hi, idx, ne
    cdef long c, taken, remaining
    cdef long x, y1, y2, vo, hy, hx1, hx2, ho, last_y
    cdef bint have_last
    cdef int log
    if limit >= 0:
        cap = limit
    else:
        cap = nh * nv + 1
    order = sorted(range(nh), key=lambda t: (hs[t][0], hs[t][3], t))
    cdef long* slot_y = <long*> malloc((nh + 1) * sizeof(long))
    cdef long* sh_y = <long*> malloc((nh + 1) * sizeof(long))
    cdef long* sh_x1 = <long*> malloc((nh + 1) * sizeof(long))
    cdef long* sh_x2 = <long*> malloc((nh + 1) * sizeof(long))
    cdef long* sh_o = <long*> malloc((nh + 1) * sizeof(long))
    cdef long* tree = <long*> calloc(nh + 2, sizeof(long))
    cdef long* slot_of = <long*> malloc((nh + 1) * sizeof(long))
    for s in range(nh):
        i = order[s]
        h = hs[i]
        slot_of[i] = s
        slot_y[s] = h[0]
        sh_y[s] = h[0]
        sh_x1[s] = h[1]
        sh_x2[s] = h[2]
        sh_o[s] = h[3]
    log = 0
    while (<Py_ssize_t> 1 << log) <= nh:
        log += 1
    # sweep schedule: (x, phase, index) with phase 0 insert, 1 query, 2 remove
    sched = []
    for i in range(nh):
        h = hs[i]
        sched.append((h[1], 0, i))
        sched.append((h[2], 2, i))
    for i in range(nv):
        sched.append((vs[i][0], 1, i))
    sched.sort()
    out = []
    ne = 0
    cdef Py_ssize_t si = 0, ns = len(sched)
    try:
        while si < ns:
            if ne >= cap:
                break
            x = sched[si][0]
            group = []
            remaining = cap - ne
            while si < ns and sched[si][0] == x:
                _, phase, idx = sched[si]
                if phase == 0:
                    _fen_add(tree, nh, slot_of[idx], 1)
                elif phase == 1:
                    v = vs[idx]
                    y1 = v[1]; y2 = v[2]; vo = v[3]
                    lo = _lower_l(slot_y, nh, y1)
                    hi = _upper_l(slot_y, nh, y2)
                    c = _fen_prefix(tree, lo)
                    taken = 0
                    have_last = False
                    last_y = 0
                    while True:
                        s = _fen_kth(tree, nh, log, c + 1)
                        if s >= hi:
                            break
                        hy = sh_y[s]; hx1 = sh_x1[s]; hx2 = sh_x2[s]; ho = sh_o[s]
                        if taken >= remaining and not (have_last and hy == last_y):
                            break
                        if ho == vo:
                            group.append((x, hy, 0, ho, vo, False))
                        else:
                            group.append((x, hy, 1, ho, vo,
                                          hx1 < x < hx2 and y1 < hy < y2))
                        last_y = hy
                        have_last = True
                        taken += 1
                        c += 1
                else:
                    break
                si += 1
            # flush the group before removals at this x
            group.sort(key=_event_key)
            if len(group) > remaining:
                del group[remaining:]
            out.extend(group)
            ne += len(group)
            while si < ns and sched[si][0] == x:
                _, phase, idx = sched[si]
                _fen_add(tree, nh, slot_of[idx], -1)
                si += 1
    finally:
        free(slot_y); free(sh_y); free(sh_x1); free(sh_x2); free(sh_o)
        free(tree); free(slot_of)
    return out
