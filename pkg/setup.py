"""Build script for the compiled signal-summation kernel.

The package works without the extension (a numpy fallback is selected at
import time), so failures here only cost speed, not correctness.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "kspacesim.kernels._stepping_cy",
                ["src/kspacesim/kernels/_stepping_cy.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
