"""Build script for the optional compiled kernels.

The package is pure Python; `hurwitzrec._speed` is a Cython extension that
accelerates the exact-rational inner loops.  If Cython (or a C compiler) is
unavailable, or HURWITZREC_NO_EXT=1 is set, the build skips the extension and
the package falls back to the pure-Python kernels at import time.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("HURWITZREC_NO_EXT") != "1" and os.path.exists("src/hurwitzrec/_speed.pyx"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hurwitzrec/_speed.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
