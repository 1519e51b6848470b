import os

from setuptools import Extension, setup

# The compiled search core is optional: the package falls back to the pure
# Python twin in semigrundy._kernels when the extension is absent.
ext_modules = []
if not os.environ.get("SEMIGRUNDY_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("semigrundy._ckernels", ["src/semigrundy/_ckernels.pyx"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
