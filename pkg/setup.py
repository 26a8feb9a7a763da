from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "alephcube._kernels._ckernels",
        ["src/alephcube/_kernels/_ckernels.pyx"],
        extra_compile_args=["-O2"],
    )
]

setup(
    # Without Cython the package still installs; the pure-Python kernels
    # are picked up at import time.
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"})
    if cythonize is not None
    else [],
)
