# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython backend for the stepping signal-summation kernel.

See ``kspacesim.kernels`` for the contract shared with the numpy fallback.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin

cnp.import_array()


def signal_sum(object e0_in, object p_in, object kx_in, object ky_in):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] e0 = \
        np.ascontiguousarray(e0_in, dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1, mode="c"] kx = \
        np.ascontiguousarray(kx_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1, mode="c"] ky = \
        np.ascontiguousarray(ky_in, dtype=np.float64)

    cdef Py_ssize_t n = e0.shape[0]
    cdef Py_ssize_t m = kx.shape[0]
    if e0.shape[1] != n:
        raise ValueError("weight grid must be square")
    if ky.shape[0] != m:
        raise ValueError("kx and ky must be 1-D arrays of equal length")

    cdef bint stepped = p_in is not None
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] p
    if stepped:
        p = np.ascontiguousarray(p_in, dtype=np.complex128)
        if p.shape[0] != n or p.shape[1] != n:
            raise ValueError("step factor must match the weight grid shape")
    else:
        p = np.empty((0, 0), dtype=np.complex128)

    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] e = e0.copy()
    cdef cnp.ndarray[cnp.complex128_t, ndim=1, mode="c"] out = \
        np.empty(m, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1, mode="c"] ex = \
        np.empty(n, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1, mode="c"] ey = \
        np.empty(n, dtype=np.complex128)

    cdef double complex[:, ::1] ev = e
    cdef double complex[:, ::1] pv = p
    cdef double complex[::1] exv = ex
    cdef double complex[::1] eyv = ey
    cdef double complex[::1] outv = out
    cdef double[::1] kxv = kx
    cdef double[::1] kyv = ky

    cdef Py_ssize_t j, a, b, half = n // 2
    cdef double two_pi = 6.283185307179586476925287
    cdef double cx, cy, arg
    cdef double complex acc, rowdot

    with nogil:
        for j in range(m):
            if j > 0 and stepped:
                for a in range(n):
                    for b in range(n):
                        ev[a, b] = ev[a, b] * pv[a, b]
            cx = -two_pi * kxv[j] / n
            cy = -two_pi * kyv[j] / n
            for b in range(n):
                arg = cx * (b - half)
                exv[b] = cos(arg) + 1j * sin(arg)
                arg = cy * (b - half)
                eyv[b] = cos(arg) + 1j * sin(arg)
            acc = 0
            for a in range(n):
                rowdot = 0
                for b in range(n):
                    rowdot = rowdot + ev[a, b] * exv[b]
                acc = acc + eyv[a] * rowdot
            outv[j] = acc
    return out
