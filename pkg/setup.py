"""Build script: compiles the tracing kernel when Cython is available.

The package works without the extension (a pure-Python fallback is
selected at import time), so a missing Cython or a failed compile only
costs speed, not functionality.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/chordgenus/_speedups.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("warning: Cython not found, building without the compiled kernel")

setup(ext_modules=ext_modules)
