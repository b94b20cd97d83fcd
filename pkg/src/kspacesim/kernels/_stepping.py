"""Numpy fallback for the stepping signal-summation kernel.

See ``kspacesim.kernels`` for the contract shared with the Cython backend.
"""

import numpy as np


def signal_sum(e0, p, kx, ky):
    e0 = np.ascontiguousarray(e0, dtype=np.complex128)
    kx = np.asarray(kx, dtype=np.float64)
    ky = np.asarray(ky, dtype=np.float64)
    n = e0.shape[0]
    if e0.shape != (n, n):
        raise ValueError("weight grid must be square")
    if kx.shape != ky.shape or kx.ndim != 1:
        raise ValueError("kx and ky must be 1-D arrays of equal length")
    if p is not None:
        p = np.ascontiguousarray(p, dtype=np.complex128)
        if p.shape != e0.shape:
            raise ValueError("step factor must match the weight grid shape")

    coords = np.arange(n, dtype=np.float64) - n // 2
    out = np.empty(kx.shape[0], dtype=np.complex128)
    e = e0.copy()
    two_pi = 2.0 * np.pi
    for j in range(out.shape[0]):
        if j > 0 and p is not None:
            e *= p
        ex = np.exp((-1j * two_pi * kx[j] / n) * coords)
        ey = np.exp((-1j * two_pi * ky[j] / n) * coords)
        out[j] = ey @ e @ ex
    return out
