# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan of basis-family bitmasks against a precomputed exchange table.

A family of k-subsets is a bitmask F over the canonical subset list; the
table gives, for each ordered subset pair (a, b) at swap distance >= 2 and
each element leaving a, the mask of families that would satisfy the
exchange step. F passes iff it hits every such mask for every pair inside
it. The scan walks a contiguous index range with early exit on the first
violated constraint.
"""

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define CTZ32(x) __builtin_ctz(x)
    #else
    static int CTZ32(unsigned int x) { int i = 0; while (!(x & 1u)) { x >>= 1; ++i; } return i; }
    #endif
    """
    int CTZ32(unsigned int x) nogil


cdef inline bint _passes(const unsigned int[::1] ptr, const unsigned int[::1] needs,
                         int m, unsigned int F) nogil:
    cdef unsigned int fa = F, fb, t, t_end
    cdef int a, b, row
    while fa != 0:
        a = CTZ32(fa)
        fa &= fa - 1
        row = a * m
        fb = F
        while fb != 0:
            b = CTZ32(fb)
            fb &= fb - 1
            if b == a:
                continue
            t = ptr[row + b]
            t_end = ptr[row + b + 1]
            while t < t_end:
                if (F & needs[t]) == 0:
                    return False
                t += 1
    return True


def scan_families(const unsigned int[::1] ptr, const unsigned int[::1] needs,
                  int m, unsigned int start, unsigned int stop):
    """Family masks in [start, stop) whose subset family passes exchange."""
    cdef list out = []
    cdef unsigned int F
    for F in range(start, stop):
        if F != 0 and _passes(ptr, needs, m, F):
            out.append(F)
    return out


def check_family(const unsigned int[::1] ptr, const unsigned int[::1] needs,
                 int m, unsigned int mask):
    """Exchange check for a single family mask."""
    if mask == 0:
        return False
    return bool(_passes(ptr, needs, m, mask))
