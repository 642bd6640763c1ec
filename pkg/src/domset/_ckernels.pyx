# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels.

Drop-in replacement for domset._pykernels.BitsetKernel. Semantics,
return values and tie-breaking must match the pure version exactly;
tests/test_kernels.py enforces parity.

Masks cross the boundary as Python ints and are unpacked once into
little-endian uint64 words.
"""

from cpython.bytes cimport PyBytes_AsStringAndSize
from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.stdint cimport uint64_t
from libc.string cimport memcpy

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline unsigned long long ds_popcll(unsigned long long x) {
        return (unsigned long long)__builtin_popcountll(x);
    }
    static inline unsigned long long ds_ctzll(unsigned long long x) {
        return (unsigned long long)__builtin_ctzll(x);
    }
    #else
    static inline unsigned long long ds_popcll(unsigned long long x) {
        x = x - ((x >> 1) & 0x5555555555555555ULL);
        x = (x & 0x3333333333333333ULL) + ((x >> 2) & 0x3333333333333333ULL);
        x = (x + (x >> 4)) & 0x0f0f0f0f0f0f0f0fULL;
        return (x * 0x0101010101010101ULL) >> 56;
    }
    static inline unsigned long long ds_ctzll(unsigned long long x) {
        unsigned long long c = 0;
        while (!(x & 1ULL)) { x >>= 1; ++c; }
        return c;
    }
    #endif
    """
    uint64_t ds_popcll(uint64_t x) nogil
    uint64_t ds_ctzll(uint64_t x) nogil


cdef class BitsetKernel:
    backend = "c"

    cdef uint64_t* _masks     # n rows of w words each
    cdef uint64_t* _active
    cdef uint64_t* _other     # excluded / banned
    cdef uint64_t* _used
    cdef uint64_t* _dom
    cdef Py_ssize_t _n, _w, _nbytes

    def __cinit__(self, masks, nbits):
        cdef Py_ssize_t v
        self._n = len(masks)
        self._w = (nbits + 63) // 64
        if self._w < 1:
            self._w = 1
        self._nbytes = self._w * 8
        self._masks = <uint64_t*> PyMem_Malloc(self._n * self._nbytes + 8)
        self._active = <uint64_t*> PyMem_Malloc(self._nbytes)
        self._other = <uint64_t*> PyMem_Malloc(self._nbytes)
        self._used = <uint64_t*> PyMem_Malloc(self._nbytes)
        self._dom = <uint64_t*> PyMem_Malloc(self._nbytes)
        if (self._masks == NULL or self._active == NULL or self._other == NULL
                or self._used == NULL or self._dom == NULL):
            raise MemoryError()
        for v in range(self._n):
            self._load(masks[v], self._masks + v * self._w)

    def __dealloc__(self):
        PyMem_Free(self._masks)
        PyMem_Free(self._active)
        PyMem_Free(self._other)
        PyMem_Free(self._used)
        PyMem_Free(self._dom)

    cdef int _load(self, obj, uint64_t* dst) except -1:
        cdef bytes b = obj.to_bytes(self._nbytes, "little")
        cdef char* p
        cdef Py_ssize_t ln
        PyBytes_AsStringAndSize(b, &p, &ln)
        memcpy(dst, p, ln)
        return 0

    def best_cover(self, active, excluded=0):
        cdef Py_ssize_t v, k, base
        cdef Py_ssize_t best_v = -1
        cdef uint64_t c, best_c = 0
        self._load(active, self._active)
        self._load(excluded, self._other)
        for v in range(self._n):
            if (self._other[v >> 6] >> (v & 63)) & 1:
                continue
            c = 0
            base = v * self._w
            for k in range(self._w):
                c += ds_popcll(self._masks[base + k] & self._active[k])
            if best_v < 0 or c > best_c:
                best_c = c
                best_v = v
        if best_v < 0:
            return -1, 0
        return best_v, <object> int(best_c)

    def pack_bound(self, active, banned=0):
        cdef Py_ssize_t k, j, u, base
        cdef uint64_t word, any_dom, overlap
        cdef long count = 0
        self._load(active, self._active)
        self._load(banned, self._other)
        for k in range(self._w):
            self._used[k] = 0
        for k in range(self._w):
            word = self._active[k]
            while word:
                u = (k << 6) + <Py_ssize_t> ds_ctzll(word)
                word &= word - 1
                base = u * self._w
                any_dom = 0
                overlap = 0
                for j in range(self._w):
                    self._dom[j] = self._masks[base + j] & ~self._other[j]
                    any_dom |= self._dom[j]
                    overlap |= self._dom[j] & self._used[j]
                if any_dom == 0:
                    return -1
                if overlap == 0:
                    count += 1
                    for j in range(self._w):
                        self._used[j] |= self._dom[j]
        return count

    def pick_target(self, active, banned=0):
        cdef Py_ssize_t k, j, u, base
        cdef Py_ssize_t best_u = -1
        cdef uint64_t word, c, best_c = 0
        self._load(active, self._active)
        self._load(banned, self._other)
        for k in range(self._w):
            word = self._active[k]
            while word:
                u = (k << 6) + <Py_ssize_t> ds_ctzll(word)
                word &= word - 1
                base = u * self._w
                c = 0
                for j in range(self._w):
                    c += ds_popcll(self._masks[base + j] & ~self._other[j])
                if best_u < 0 or c < best_c:
                    best_c = c
                    best_u = u
        return best_u
