"""Build script for the optional compiled scan/histogram core.

The package is fully functional without the extension (a pure-Python
twin is selected at import time); the extension only makes the per-byte
hot loops fast.  Build it in place with:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "casehide._speedups",
                ["src/casehide/_speedups.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
