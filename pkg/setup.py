"""Build script.

The compiled kernel is optional: if Cython (or a C compiler) is missing the
package installs anyway and falls back to the pure-Python kernel at import.
"""
import os
from setuptools import setup

ext_modules = []
if os.environ.get("GCENTER_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/gcenter/_cykernel.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
