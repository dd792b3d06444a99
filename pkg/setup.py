"""Build script: compiles the optional Sturm-bisection kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time); the build therefore tolerates a missing Cython or
compiler instead of failing the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("dunklpauli._kernels", ["src/dunklpauli/_kernels.pyx"])],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
