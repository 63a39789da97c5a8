import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CURVESAT_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("curvesat._core", ["src/curvesat/_core.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython available: install the pure-Python fallback only.
        ext_modules = []

setup(ext_modules=ext_modules)
