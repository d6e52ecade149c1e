"""Build script for the optional compiled kernel.

The package is pure Python except for ``a2loci._kern``, a Cython twin of
``a2loci._kern_py`` that speeds up the Littlewood-Richardson counting DFS.
The extension is marked optional: if it cannot be built the install still
succeeds and the package falls back to the pure implementation at import.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "a2loci._kern",
                ["src/a2loci/_kern.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
