"""Build script for the optional compiled kernel.

The package is fully functional without the extension (a pure-Python
twin of the kernel is selected at import time), but the compiled kernel
is what makes large support scans practical.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "cyclolc._kernel._fast",
                sources=["src/cyclolc/_kernel/_fast.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
