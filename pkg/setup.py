from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("gridband._core", ["src/gridband/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # the package falls back to the pure-Python kernels at import time
    extensions = []

setup(ext_modules=extensions)
