# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same algorithms and tie-breaking as ``_pykernels``."""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy, memset
from cpython.mem cimport PyMem_Malloc, PyMem_Free

BACKEND = "cython"

cdef enum:
    MAXN = 62
    CODEWORDS = 30        # ceil(62 * 61 / 2 / 64)
    MAXAUTOS = 512

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil
    bint add_overflow "__builtin_add_overflow"(unsigned long long, unsigned long long, unsigned long long*) nogil
    bint mul_overflow "__builtin_mul_overflow"(unsigned long long, unsigned long long, unsigned long long*) nogil


# counting ---------------------------------------------------------------------

cdef int _clique_cover(const uint64_t* masks, uint64_t cand) noexcept nogil:
    cdef int cliques = 0
    cdef uint64_t rest = cand, pool, low
    while rest:
        low = rest & (~rest + 1)
        pool = rest & masks[ctz64(low)]
        rest ^= low
        while pool:
            low = pool & (~pool + 1)
            rest ^= low
            pool &= masks[ctz64(low)]
        cliques += 1
    return cliques


cdef uint64_t _component(const uint64_t* masks, uint64_t seed, uint64_t within) noexcept nogil:
    cdef uint64_t seen = seed, frontier = seed, nxt, low
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & (~frontier + 1)
            nxt |= masks[ctz64(low)]
            frontier ^= low
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


cdef int _count(const uint64_t* masks, uint64_t cand, int lb, unsigned long long* out) except -2 nogil:
    cdef int best_v = -1, best_d = -1, d, v, ub, a_in, a_out, total
    cdef uint64_t m, low, bit, comp, rest
    cdef unsigned long long c_in = 0, c_out = 0, prodc
    if cand == 0:
        out[0] = 1
        return 0
    m = cand
    while m:
        low = m & (~m + 1)
        v = ctz64(low)
        m ^= low
        d = popcount64(masks[v] & cand)
        if d > best_d:
            best_d = d
            best_v = v
    if best_d == 0:
        out[0] = 1
        return popcount64(cand)
    comp = _component(masks, cand & (~cand + 1), cand)
    if comp != cand:
        # disconnected: alphas add, counts multiply
        total = 0
        prodc = 1
        rest = cand
        while rest:
            comp = _component(masks, rest & (~rest + 1), rest)
            total += _count(masks, comp, 0, &c_in)
            if mul_overflow(prodc, c_in, &prodc):
                with gil:
                    raise OverflowError("maximum independent set count exceeds 64 bits")
            rest &= ~comp
        out[0] = prodc
        return total
    ub = _clique_cover(masks, cand)
    if ub < lb:
        out[0] = 0
        return ub
    if ub == 1:
        out[0] = popcount64(cand)
        return 1
    bit = (<uint64_t>1) << best_v
    a_in = _count(masks, cand & ~masks[best_v] & ~bit, lb - 1 if lb > 0 else 0, &c_in) + 1
    if a_in >= lb:
        a_out = _count(masks, cand & ~bit, a_in, &c_out)
        if a_out > a_in:
            out[0] = c_out
            return a_out
        if a_out == a_in:
            if add_overflow(c_in, c_out, out):
                with gil:
                    raise OverflowError("maximum independent set count exceeds 64 bits")
            return a_in
        out[0] = c_in
        return a_in
    a_out = _count(masks, cand & ~bit, lb, &c_out)
    if a_out >= lb:
        out[0] = c_out
        return a_out
    out[0] = 0
    return a_in if a_in > a_out else a_out


def mis_count(masks, cand, int lb=0):
    """Independence number and number of maximum independent sets of ``cand``."""
    cdef uint64_t cm[MAXN]
    cdef int n = len(masks), i, a
    cdef unsigned long long c = 0
    if n > MAXN:
        raise ValueError("at most 62 vertices")
    for i in range(n):
        cm[i] = masks[i]
    a = _count(cm, <uint64_t>cand, lb, &c)
    return a, int(c)


# canonical labeling -------------------------------------------------------------

cdef struct Search:
    int n
    uint64_t masks[MAXN]
    bint have_first
    int first_order[MAXN]
    int first_path[MAXN]
    int first_depth
    uint64_t first_code[CODEWORDS]
    int best_order[MAXN]
    uint64_t best_code[CODEWORDS]
    int nwords
    int nautos
    int autos[MAXAUTOS][MAXN]


cdef void _leaf_code(Search* s, const int* order, uint64_t* code) noexcept nogil:
    cdef int i, j, k = 0, n = s.n
    cdef uint64_t mj
    memset(code, 0, CODEWORDS * sizeof(uint64_t))
    for j in range(1, n):
        mj = s.masks[order[j]]
        for i in range(j):
            if (mj >> order[i]) & 1:
                code[k >> 6] |= (<uint64_t>1) << (63 - (k & 63))
            k += 1


cdef int _cmp_code(const uint64_t* a, const uint64_t* b, int nwords) noexcept nogil:
    cdef int i
    for i in range(nwords):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


cdef int _refine(Search* s, int* lab, int* cellsize, int ncells) noexcept nogil:
    # lab: vertices in cell order; cellsize[c]: size of cell c. Returns new ncells.
    cdef uint64_t cms[MAXN]
    cdef int cnt[MAXN][MAXN]
    cdef int newlab[MAXN]
    cdef int newsize[MAXN]
    cdef int c, i, j, k, v, w, start, size, nnew, changed, tmp, diff
    cdef int n = s.n
    while True:
        start = 0
        for c in range(ncells):
            cms[c] = 0
            for i in range(start, start + cellsize[c]):
                cms[c] |= (<uint64_t>1) << lab[i]
            start += cellsize[c]
        for v in range(n):
            for c in range(ncells):
                cnt[v][c] = popcount64(s.masks[v] & cms[c])
        changed = 0
        nnew = 0
        start = 0
        for c in range(ncells):
            size = cellsize[c]
            for i in range(size):
                newlab[start + i] = lab[start + i]
            if size > 1:
                # stable insertion sort of the cell by count vector
                for i in range(start + 1, start + size):
                    v = newlab[i]
                    j = i - 1
                    while j >= start:
                        w = newlab[j]
                        diff = 0
                        for k in range(ncells):
                            if cnt[w][k] != cnt[v][k]:
                                diff = 1 if cnt[w][k] > cnt[v][k] else -1
                                break
                        if diff <= 0:
                            break
                        newlab[j + 1] = w
                        j -= 1
                    newlab[j + 1] = v
                tmp = 1
                for i in range(start + 1, start + size):
                    diff = 0
                    for k in range(ncells):
                        if cnt[newlab[i]][k] != cnt[newlab[i - 1]][k]:
                            diff = 1
                            break
                    if diff:
                        newsize[nnew] = tmp
                        nnew += 1
                        tmp = 1
                        changed = 1
                    else:
                        tmp += 1
                newsize[nnew] = tmp
                nnew += 1
            else:
                newsize[nnew] = 1
                nnew += 1
            start += size
        memcpy(lab, newlab, n * sizeof(int))
        memcpy(cellsize, newsize, nnew * sizeof(int))
        ncells = nnew
        if not changed:
            return ncells


cdef int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef bint _prunable(Search* s, int v, const int* done, int ndone, const int* path, int depth) noexcept nogil:
    cdef int parent[MAXN]
    cdef int a, i, p, ra, rb, rv
    cdef bint fixes
    for a in range(s.n):
        parent[a] = a
    for i in range(s.nautos):
        fixes = True
        for p in range(depth):
            if s.autos[i][path[p]] != path[p]:
                fixes = False
                break
        if not fixes:
            continue
        for a in range(s.n):
            ra = _find(parent, a)
            rb = _find(parent, s.autos[i][a])
            if ra != rb:
                parent[ra] = rb
    rv = _find(parent, v)
    for i in range(ndone):
        if _find(parent, done[i]) == rv:
            return True
    return False


cdef void _record_auto(Search* s, const int* src, const int* dst) noexcept nogil:
    cdef int i
    if s.nautos >= MAXAUTOS:
        return
    for i in range(s.n):
        s.autos[s.nautos][src[i]] = dst[i]
    s.nautos += 1


cdef int _search(Search* s, int* lab, int* cellsize, int ncells, int* path, int depth) noexcept nogil:
    cdef int tidx = -1, tstart = 0, start = 0, c, i, k, r, v, tsize, nc
    cdef int clab[MAXN]
    cdef int csize[MAXN + 1]
    cdef int done[MAXN]
    cdef int ndone = 0
    cdef int target[MAXN]
    cdef uint64_t code[CODEWORDS]
    for c in range(ncells):
        if cellsize[c] > 1:
            tidx = c
            tstart = start
            break
        start += cellsize[c]
    if tidx < 0:
        _leaf_code(s, lab, code)
        if not s.have_first:
            s.have_first = True
            memcpy(s.first_order, lab, s.n * sizeof(int))
            memcpy(s.first_path, path, depth * sizeof(int))
            s.first_depth = depth
            memcpy(s.first_code, code, CODEWORDS * sizeof(uint64_t))
            memcpy(s.best_order, lab, s.n * sizeof(int))
            memcpy(s.best_code, code, CODEWORDS * sizeof(uint64_t))
            return -1
        if _cmp_code(code, s.first_code, s.nwords) == 0:
            _record_auto(s, s.first_order, lab)
            k = 0
            while path[k] == s.first_path[k]:
                k += 1
            return k
        c = _cmp_code(code, s.best_code, s.nwords)
        if c == 0:
            _record_auto(s, s.best_order, lab)
        elif c < 0:
            memcpy(s.best_order, lab, s.n * sizeof(int))
            memcpy(s.best_code, code, CODEWORDS * sizeof(uint64_t))
        return -1
    tsize = cellsize[tidx]
    for i in range(tsize):
        target[i] = lab[tstart + i]
    for i in range(tsize):
        v = target[i]
        if ndone and _prunable(s, v, done, ndone, path, depth):
            continue
        # child partition: cells before, [v], target minus v, cells after
        memcpy(clab, lab, s.n * sizeof(int))
        clab[tstart] = v
        k = tstart + 1
        for c in range(tsize):
            if target[c] != v:
                clab[k] = target[c]
                k += 1
        for c in range(tidx):
            csize[c] = cellsize[c]
        csize[tidx] = 1
        csize[tidx + 1] = tsize - 1
        for c in range(tidx + 1, ncells):
            csize[c + 1] = cellsize[c]
        nc = _refine(s, clab, csize, ncells + 1)
        path[depth] = v
        r = _search(s, clab, csize, nc, path, depth + 1)
        done[ndone] = v
        ndone += 1
        if r >= 0 and r < depth:
            return r
    return -1


def canonical_labeling(int n, masks):
    """Return ``(order, code)``; see ``_pykernels.canonical_labeling``."""
    cdef Search* s
    cdef int lab[MAXN]
    cdef int cellsize[MAXN]
    cdef int path[MAXN]
    cdef int i, nc
    cdef bytes raw
    if n > MAXN or n < 1:
        raise ValueError("order must be in 1..62")
    s = <Search*>PyMem_Malloc(sizeof(Search))
    if s == NULL:
        raise MemoryError()
    try:
        s.n = n
        s.have_first = False
        s.nautos = 0
        s.nwords = (n * (n - 1) // 2 + 63) // 64
        for i in range(n):
            s.masks[i] = masks[i]
            lab[i] = i
        cellsize[0] = n
        with nogil:
            nc = _refine(s, lab, cellsize, 1)
            _search(s, lab, cellsize, nc, path, 0)
        order = [s.best_order[i] for i in range(n)]
        nbits = n * (n - 1) // 2
        code = 0
        for i in range(s.nwords):
            code = (code << 64) | s.best_code[i]
        code >>= s.nwords * 64 - nbits
        return order, code
    finally:
        PyMem_Free(s)
