"""Build hook for the optional Cython kernels.

If Cython or a C compiler is unavailable the package installs without the
extension and runs on the pure-Python kernels.
"""

import os
import sys

from setuptools import setup

ext_modules = []
if os.environ.get("UAWKIT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("uawkit._kernels_c", ["src/uawkit/_kernels_c.pyx"])],
            language_level="3",
        )
    except Exception as exc:  # pragma: no cover - build environment dependent
        print(f"warning: building without compiled kernels ({exc})", file=sys.stderr)
        ext_modules = []

setup(ext_modules=ext_modules)
