"""Hot-loop kernel for the per-sample-time signal summation.

Two interchangeable implementations exist: a Cython extension and a pure
numpy fallback. The extension is preferred when importable; setting the
environment variable ``KSPACESIM_PURE_PYTHON=1`` forces the fallback.
``benchmarks/bench_kernel.py`` compares the two.

Kernel contract (both backends):

    signal_sum(e0, p, kx, ky) -> complex128[m]

    out[j] = sum_{a,b} (e0 * p**j)[a, b]
             * exp(-2i*pi*(kx[j]*(b - n//2) + ky[j]*(a - n//2)) / n)

``e0`` is the voxel weight grid already advanced to the first sample's
acquisition time; ``p`` is the per-voxel advance factor for one inter-sample
step (``None`` when every sample shares one time). Rows index y, columns x,
both as centered integers. Sample times must be a uniform ramp, which every
trajectory constructor guarantees.
"""

import os

from kspacesim.kernels import _stepping as _py

_cy = None
if os.environ.get("KSPACESIM_PURE_PYTHON", "") != "1":
    try:
        from kspacesim.kernels import _stepping_cy as _cy
    except ImportError:
        _cy = None

if _cy is not None:
    signal_sum = _cy.signal_sum
    KERNEL_BACKEND = "cython"
else:
    signal_sum = _py.signal_sum
    KERNEL_BACKEND = "python"

__all__ = ["signal_sum", "KERNEL_BACKEND"]
