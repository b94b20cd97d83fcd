"""Simulation of complex-valued fMRI k-space time series.

Submodules
----------
phantom     digital tissue volumes (M0, T1, T2*, field offset, activation)
trajectory  k-space sampling paths and their per-sample acquisition times
signal      steady-state signal equations and the sample-time DFT forward model
noise       k-space noise injection, magnitude/phase distribution theory
experiment  block designs, activation scaling, time-series assembly
recon       inverse DFT reconstruction, gridding, coil combination
stats       voxelwise t-maps, SNR maps, histogram diagnostics
config      run configuration parsing and validation
archive     binary series archives (SHKTS1) with per-frame checksums
imaging     raster export of 2-D maps
service     HTTP interface
cli         command-line interface
"""

from kspacesim.kernels import KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
