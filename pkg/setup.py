"""Build script: compiles the optional Cython kernel when Cython is available.

The package is pure Python by default; `ncgram._kernels` is a drop-in compiled
twin of `ncgram._kernels_py`. If Cython (or a C compiler) is missing, the build
proceeds without the extension and the pure fallback is used at runtime.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/ncgram/_kernels.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
