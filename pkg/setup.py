"""Build script for the optional compiled kernels.

The package is pure Python by default. Building the Cython extension gives a
much faster inner loop for the metric sweeps:

    python setup.py build_ext --inplace

If Cython or a C compiler is missing, installation proceeds without the
extension and the pure-Python kernels are used.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "preorder_bca._kernels_c",
                ["src/preorder_bca/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=extensions)
