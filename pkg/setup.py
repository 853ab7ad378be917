"""Build the optional Cython see-saw kernel.

The package works without the extension (a numpy implementation is
selected at import time), so compilation failures are demoted to a
warning rather than aborting the install.
"""

import warnings

from setuptools import setup

try:
    import numpy
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    extensions = cythonize(
        [
            Extension(
                "grac._seesaw_cy",
                ["src/grac/_seesaw_cy.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    warnings.warn(f"building without the compiled see-saw kernel: {exc}")
    extensions = []

setup(ext_modules=extensions)
