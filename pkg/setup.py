import os

from setuptools import setup

ext_modules = []
if not os.environ.get("TRIPACK_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("tripack._speedups", sources=["src/tripack/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython available: the pure-Python backend is used at runtime
        ext_modules = []

setup(ext_modules=ext_modules)
