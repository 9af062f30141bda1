# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitmask kernels for matching enumeration and connected
edge-subset growth.  Same contracts as ``htspec._kernels_py``; limited
to 63 edges (one uint64 mask word).  The dispatcher in
``htspec.kernels`` falls back to the Python version above that size.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.string cimport memset

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef void _match_rec(uint64_t avail, int size, const uint64_t* conflicts,
                     int64_t* counts) noexcept nogil:
    cdef uint64_t bit, rest
    cdef int i
    while avail:
        bit = avail & (~avail + 1)
        avail ^= bit
        i = __builtin_ctzll(bit)
        counts[size + 1] += 1
        rest = avail & ~conflicts[i]
        if rest:
            _match_rec(rest, size + 1, conflicts, counts)


def count_matchings(conflicts):
    """Counts of matchings by size; see ``_kernels_py.count_matchings``."""
    cdef int m = len(conflicts)
    if m > 63:
        raise ValueError("compiled kernel limited to 63 edges")
    cdef uint64_t conf[64]
    cdef int64_t counts[65]
    cdef int i
    memset(counts, 0, sizeof(counts))
    for i in range(m):
        conf[i] = <uint64_t> conflicts[i]
    counts[0] = 1
    if m > 0:
        with nogil:
            _match_rec((<uint64_t> 1 << m) - 1, 0, conf, counts)
    return [counts[i] for i in range(m + 1)]


cdef int _grow(uint64_t subset, uint64_t ext, uint64_t forbidden,
               uint64_t allowed, const uint64_t* adjacency, list out,
               Py_ssize_t cap) except -1:
    out.append(subset)
    if len(out) > cap:
        raise OverflowError("connected subset cap exceeded")
    cdef uint64_t bit, fresh
    cdef int i
    while ext:
        bit = ext & (~ext + 1)
        ext ^= bit
        i = __builtin_ctzll(bit)
        fresh = adjacency[i] & allowed & ~(subset | bit | forbidden | ext)
        _grow(subset | bit, ext | fresh, forbidden, allowed, adjacency,
              out, cap)
        forbidden |= bit
    return 0


def connected_subset_masks(adjacency, cap):
    """Connected edge subsets as masks; see ``_kernels_py``."""
    cdef int m = len(adjacency)
    if m > 63:
        raise ValueError("compiled kernel limited to 63 edges")
    cdef uint64_t adj[64]
    cdef uint64_t allowed
    cdef int a
    for a in range(m):
        adj[a] = <uint64_t> adjacency[a]
    out = []
    for a in range(m):
        allowed = ~(((<uint64_t> 1) << (a + 1)) - 1)
        _grow((<uint64_t> 1) << a, adj[a] & allowed, 0, allowed, adj, out,
              <Py_ssize_t> cap)
    return out
