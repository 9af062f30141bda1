"""Build script: compiles the optional bitmask kernel extension.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so any
build failure here downgrades to a warning instead of aborting the
install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "htspec._kernels",
                ["src/htspec/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print(
        "warning: Cython not available; installing without the compiled "
        "kernels (pure-Python fallback will be used)",
        file=sys.stderr,
    )

setup(ext_modules=ext_modules)
