# cython: language_level=3, boundscheck=False, wraparound=False
"""GMP-backed arithmetic kernels over gmpy2.mpq.

Accumulation happens in raw ``mpq_t`` buffers so the inner loops allocate
no Python objects.  Signatures match ``_pykernels``; the ``zero`` argument
is accepted for symmetry and ignored.
"""
from cpython.mem cimport PyMem_Free, PyMem_Malloc
from gmpy2 cimport *

cdef extern from "gmp.h":
    void mpq_init(mpq_ptr)
    void mpq_clear(mpq_ptr)
    void mpq_add(mpq_ptr, mpq_srcptr, mpq_srcptr)
    void mpq_mul(mpq_ptr, mpq_srcptr, mpq_srcptr)
    int mpq_sgn(mpq_srcptr)

import_gmpy2()

from gmpy2 import mpq as _mpq_type


cdef inline mpq _as_mpq(object x):
    if MPQ_Check(x):
        return <mpq>x
    return <mpq>_mpq_type(x)


cdef __mpq_struct* _alloc(Py_ssize_t n) except NULL:
    cdef __mpq_struct* buf = <__mpq_struct*>PyMem_Malloc((n if n > 0 else 1) * sizeof(__mpq_struct))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        mpq_init(&buf[i])
    return buf


cdef list _release(__mpq_struct* buf, Py_ssize_t n, bint collect):
    cdef Py_ssize_t i
    cdef list out = []
    if collect:
        for i in range(n):
            out.append(GMPy_MPQ_From_mpq(&buf[i]))
    for i in range(n):
        mpq_clear(&buf[i])
    PyMem_Free(buf)
    return out


def lincomb(coeffs, rows, zero=None):
    cdef list cs = list(coeffs)
    cdef list rs = list(rows)
    cdef Py_ssize_t count = min(len(cs), len(rs))
    cdef Py_ssize_t n = 0, i, j
    cdef mpq c, r
    cdef tuple row
    cdef list mcs = []
    cdef list mrs = []
    for i in range(count):
        c = _as_mpq(cs[i])
        if mpq_sgn(c.q) == 0:
            continue
        row = tuple(rs[i])
        mcs.append(c)
        mrs.append(row)
        if len(row) > n:
            n = len(row)
    cdef __mpq_struct* acc = _alloc(n)
    cdef __mpq_struct* tmp = _alloc(1)
    try:
        for i in range(len(mcs)):
            c = <mpq>mcs[i]
            row = <tuple>mrs[i]
            for j in range(len(row)):
                r = _as_mpq(row[j])
                if mpq_sgn(r.q) == 0:
                    continue
                mpq_mul(tmp, c.q, r.q)
                mpq_add(&acc[j], &acc[j], tmp)
    except BaseException:
        _release(tmp, 1, False)
        _release(acc, n, False)
        raise
    _release(tmp, 1, False)
    return _release(acc, n, True)


def convolve(a, b, zero=None):
    cdef list xs = [_as_mpq(v) for v in a]
    cdef list ys = [_as_mpq(v) for v in b]
    cdef Py_ssize_t la = len(xs), lb = len(ys), i, j
    if la == 0 or lb == 0:
        return []
    cdef Py_ssize_t n = la + lb - 1
    cdef mpq ai, bj
    cdef __mpq_struct* acc = _alloc(n)
    cdef __mpq_struct* tmp = _alloc(1)
    for i in range(la):
        ai = <mpq>xs[i]
        if mpq_sgn(ai.q) == 0:
            continue
        for j in range(lb):
            bj = <mpq>ys[j]
            if mpq_sgn(bj.q) == 0:
                continue
            mpq_mul(tmp, ai.q, bj.q)
            mpq_add(&acc[i + j], &acc[i + j], tmp)
    _release(tmp, 1, False)
    return _release(acc, n, True)


def horner(coeffs, t, zero=None):
    cdef list cs = [_as_mpq(v) for v in coeffs]
    cdef mpq tt = _as_mpq(t)
    cdef Py_ssize_t i
    cdef __mpq_struct* acc = _alloc(1)
    for i in range(len(cs) - 1, -1, -1):
        mpq_mul(acc, acc, tt.q)
        mpq_add(acc, acc, (<mpq>cs[i]).q)
    return _release(acc, 1, True)[0]
