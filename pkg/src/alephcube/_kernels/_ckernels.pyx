# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels for the finite hypercube.

Drop-in replacement for the pure-Python kernels: same functions, same
outputs, same ordering.  The greedy-extension candidate loop is the hot
path; it runs entirely on C arrays.
"""

__all__ = ["brute_force_maps", "extension_maps", "extension_count"]

DEF MAXSIZE = 256   # vertices for n <= 8
DEF POPSPAN = 512

cdef int[POPSPAN] POP

cdef void _fill_pop() noexcept:
    cdef int i
    POP[0] = 0
    for i in range(1, POPSPAN):
        POP[i] = POP[i >> 1] + (i & 1)

_fill_pop()


cdef bint _next_perm(int* a, int m) noexcept:
    """Advance to the next lexicographic permutation; False at the last one."""
    cdef int i = m - 2
    cdef int j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = m - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = m - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


def brute_force_maps(int n):
    """All vertex bijections of the n-cube preserving Hamming-1 adjacency,
    in lexicographic order of the map tuple."""
    if not 1 <= n <= 3:
        raise ValueError("brute-force kernel handles n <= 3")
    cdef int size = 1 << n
    cdef int[8] p
    cdef int[24] eu
    cdef int[24] ev
    cdef int nedges = 0, u, k, e
    cdef bint ok
    for u in range(size):
        for k in range(n):
            if u < u ^ (1 << k):
                eu[nedges] = u
                ev[nedges] = u ^ (1 << k)
                nedges += 1
    for u in range(size):
        p[u] = u
    out = []
    while True:
        ok = True
        for e in range(nedges):
            if POP[p[eu[e]] ^ p[ev[e]]] != 1:
                ok = False
                break
        if ok:
            out.append(tuple([p[u] for u in range(size)]))
        if not _next_perm(p, size):
            break
    return out


cdef bint _extend_axis_map(int n, int* sigma, int* wo, int* m, unsigned char* seen) noexcept:
    """Greedy extension of one axis bijection from vertex 0 (image 0).

    Returns True iff the forced images exist, are pairwise distinct, and
    every edge is preserved.  Extension commutes with XOR-translating all
    images, so the caller owns the translation loop.
    """
    cdef int size = 1 << n
    cdef int idx, v, i, j, fa, fb, fmeet, d, lo, c1, c2, k
    for v in range(size):
        m[v] = 0
        seen[v] = 0
    for k in range(n):
        m[1 << k] = 1 << sigma[k]
    for idx in range(size):
        v = wo[idx]
        if POP[v] < 2:
            continue
        i = v & (-v)
        j = (v ^ i) & (-(v ^ i))
        fa = m[v ^ i]
        fb = m[v ^ j]
        fmeet = m[v ^ i ^ j]
        d = fa ^ fb
        if POP[d] != 2:
            return False
        lo = d & (-d)
        c1 = fa ^ lo
        c2 = fa ^ (d ^ lo)
        if fmeet == c1:
            m[v] = c2
        elif fmeet == c2:
            m[v] = c1
        else:
            return False
    for v in range(size):
        if seen[m[v]]:
            return False
        seen[m[v]] = 1
    for v in range(size):
        for k in range(n):
            if POP[m[v] ^ m[v ^ (1 << k)]] != 1:
                return False
    return True


cdef void _weight_order(int n, int* wo) noexcept:
    cdef int size = 1 << n
    cdef int pos = 0, w, v
    for w in range(n + 1):
        for v in range(size):
            if POP[v] == w:
                wo[pos] = v
                pos += 1


def extension_maps(int n):
    """All adjacency-preserving bijections found by greedy extension from
    the image of one vertex and of its n neighbors, sorted canonically."""
    if not 1 <= n <= 8:
        raise ValueError("extension kernel handles n <= 8")
    cdef int size = 1 << n
    cdef int[8] sigma
    cdef int[MAXSIZE] wo
    cdef int[MAXSIZE] m
    cdef unsigned char[MAXSIZE] seen
    cdef int k, c
    _weight_order(n, wo)
    for k in range(n):
        sigma[k] = k
    out = []
    while True:
        if _extend_axis_map(n, sigma, wo, m, seen):
            for c in range(size):
                out.append(tuple([m[v] ^ c for v in range(size)]))
        if not _next_perm(sigma, n):
            break
    out.sort()
    return out


def extension_count(int n):
    """Number of maps :func:`extension_maps` would return, without storing them."""
    if not 1 <= n <= 8:
        raise ValueError("extension kernel handles n <= 8")
    cdef int size = 1 << n
    cdef int[8] sigma
    cdef int[MAXSIZE] wo
    cdef int[MAXSIZE] m
    cdef unsigned char[MAXSIZE] seen
    cdef int k
    cdef long long count = 0
    _weight_order(n, wo)
    for k in range(n):
        sigma[k] = k
    while True:
        if _extend_axis_map(n, sigma, wo, m, seen):
            count += size
        if not _next_perm(sigma, n):
            break
    return count
