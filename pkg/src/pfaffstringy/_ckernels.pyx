# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 kernels for dense integer polynomials.

Same API as ``_pykernels``.  Functional kernels fall back to the pure-Python
code whenever an input or intermediate would leave int64; ``IntPoly`` raises
``OverflowError`` and leaves the caller to retry with the Python class.
"""
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memset, memcpy
from libc.stdint cimport int64_t

from . import _pykernels

cdef extern from *:
    bint __builtin_mul_overflow(long long a, long long b, long long* res) nogil
    bint __builtin_add_overflow(long long a, long long b, long long* res) nogil
    bint __builtin_sub_overflow(long long a, long long b, long long* res) nogil

# 2**63 with some slack for the double-precision estimate.
cdef double _SAFE = 9.0e18


cdef int _load(seq, int64_t* out, Py_ssize_t n) except -1:
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = seq[i]
    return 0


def mul(a, b):
    """Product of two dense coefficient lists (both non-empty)."""
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef int64_t *x
    cdef int64_t *y
    cdef int64_t *z
    cdef int64_t ma = 0, mb = 0, v
    x = <int64_t*>malloc(na * sizeof(int64_t))
    y = <int64_t*>malloc(nb * sizeof(int64_t))
    z = <int64_t*>malloc((na + nb - 1) * sizeof(int64_t))
    try:
        try:
            _load(a, x, na)
            _load(b, y, nb)
        except OverflowError:
            return _pykernels.mul(a, b)
        for i in range(na):
            v = x[i] if x[i] >= 0 else -x[i]
            if v > ma or v < 0:
                ma = v
        for j in range(nb):
            v = y[j] if y[j] >= 0 else -y[j]
            if v > mb or v < 0:
                mb = v
        if ma < 0 or mb < 0 or <double>ma * <double>mb * <double>(na if na < nb else nb) >= _SAFE:
            return _pykernels.mul(a, b)
        memset(z, 0, (na + nb - 1) * sizeof(int64_t))
        for i in range(na):
            v = x[i]
            if v != 0:
                for j in range(nb):
                    z[i + j] += v * y[j]
        return [z[i] for i in range(na + nb - 1)]
    finally:
        free(x)
        free(y)
        free(z)


def divexact(a, b):
    """Quotient ``a / b`` if ``b`` divides ``a`` in Z[q], else ``None``."""
    cdef Py_ssize_t la = len(a), lb = len(b), k, j
    if la < lb:
        return _pykernels.divexact(a, b)
    cdef int64_t *rem = <int64_t*>malloc(la * sizeof(int64_t))
    cdef int64_t *d = <int64_t*>malloc(lb * sizeof(int64_t))
    cdef int64_t *quo = <int64_t*>malloc((la - lb + 1) * sizeof(int64_t))
    cdef long long top, lead, c, t
    try:
        try:
            _load(a, rem, la)
            _load(b, d, lb)
        except OverflowError:
            return _pykernels.divexact(a, b)
        lead = d[lb - 1]
        for k in range(la - lb, -1, -1):
            top = rem[k + lb - 1]
            if top == 0:
                quo[k] = 0
                continue
            if lead == -1 and top == -top:
                return _pykernels.divexact(a, b)
            if top % lead != 0:
                return None
            c = top // lead
            quo[k] = c
            for j in range(lb):
                if __builtin_mul_overflow(c, d[j], &t) or __builtin_sub_overflow(rem[k + j], t, &t):
                    return _pykernels.divexact(a, b)
                rem[k + j] = t
        for k in range(lb - 1):
            if rem[k] != 0:
                return None
        return [quo[k] for k in range(la - lb + 1)]
    finally:
        free(rem)
        free(d)
        free(quo)


cdef class IntPoly:
    """Mutable dense Laurent polynomial with int64 coefficients."""

    cdef int64_t* buf
    cdef Py_ssize_t n
    cdef Py_ssize_t cap
    cdef public long low

    def __cinit__(self, coeffs=(1,), long low=0):
        cdef Py_ssize_t m = len(coeffs)
        self.cap = m if m > 8 else 8
        self.buf = <int64_t*>malloc(self.cap * sizeof(int64_t))
        if self.buf == NULL:
            raise MemoryError()
        self.n = m
        self.low = low
        _load(coeffs, self.buf, m)

    def __dealloc__(self):
        free(self.buf)

    cdef void _reserve(self, Py_ssize_t m):
        if m > self.cap:
            while self.cap < m:
                self.cap *= 2
            self.buf = <int64_t*>realloc(self.buf, self.cap * sizeof(int64_t))

    def copy(self):
        cdef IntPoly out = IntPoly.__new__(IntPoly, (), self.low)
        out._reserve(self.n)
        memcpy(out.buf, self.buf, self.n * sizeof(int64_t))
        out.n = self.n
        return out

    def shift(self, long e):
        self.low += e

    def scale(self, long long c):
        cdef Py_ssize_t i
        cdef long long t
        for i in range(self.n):
            if __builtin_mul_overflow(self.buf[i], c, &t):
                raise OverflowError("coefficient overflow")
            self.buf[i] = t

    def mul_binomial(self, long long a, long long b, Py_ssize_t e):
        """Multiply in place by ``a + b*q**e`` with ``e >= 0``."""
        cdef Py_ssize_t i, n = self.n
        cdef long long s, t, u
        if e == 0:
            if __builtin_add_overflow(a, b, &s):
                raise OverflowError("coefficient overflow")
            self.scale(s)
            return
        self._reserve(n + e)
        # Walk from the top so the source entries are still unmodified.
        for i in range(n + e - 1, -1, -1):
            t = 0
            if i < n:
                if __builtin_mul_overflow(a, self.buf[i], &t):
                    raise OverflowError("coefficient overflow")
            if i >= e:
                if __builtin_mul_overflow(b, self.buf[i - e], &u) or __builtin_add_overflow(t, u, &t):
                    raise OverflowError("coefficient overflow")
            self.buf[i] = t
        self.n = n + e

    def iadd(self, IntPoly other):
        cdef long lo = self.low if self.low < other.low else other.low
        cdef long hi_s = self.low + self.n, hi_o = other.low + other.n
        cdef long hi = hi_s if hi_s > hi_o else hi_o
        cdef Py_ssize_t m = hi - lo, i, off
        cdef int64_t* out = <int64_t*>malloc(m * sizeof(int64_t))
        cdef long long t
        memset(out, 0, m * sizeof(int64_t))
        off = self.low - lo
        for i in range(self.n):
            out[off + i] = self.buf[i]
        off = other.low - lo
        for i in range(other.n):
            if __builtin_add_overflow(out[off + i], other.buf[i], &t):
                free(out)
                raise OverflowError("coefficient overflow")
            out[off + i] = t
        free(self.buf)
        self.buf = out
        self.n = m
        self.cap = m
        self.low = lo

    def terms(self):
        """``(low, coeffs)`` with zero ends trimmed; ``(0, [])`` for zero."""
        cdef Py_ssize_t i = 0, j = self.n
        while i < j and self.buf[i] == 0:
            i += 1
        while j > i and self.buf[j - 1] == 0:
            j -= 1
        if i == j:
            return 0, []
        return self.low + i, [self.buf[k] for k in range(i, j)]

    def equals(self, IntPoly other):
        return self.terms() == other.terms()
