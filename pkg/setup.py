import sys

from setuptools import Extension, setup

# The compiled elimination kernels are an optional speedup; the package
# falls back to the pure-Python implementations when the extension is
# missing (see derring.kernels).
ext_modules = []
try:
    from Cython.Build import cythonize

    extra = [] if sys.platform.startswith("win") else ["-O3"]
    ext_modules = cythonize(
        [
            Extension(
                "derring.kernels._celim",
                ["src/derring/kernels/_celim.pyx"],
                extra_compile_args=extra,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
