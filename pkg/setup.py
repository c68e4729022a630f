from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "expwell.eigen._kernels",
        ["src/expwell/eigen/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

if cythonize is not None:
    ext_modules = cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
else:
    # no Cython: install runs on the pure-Python kernels selected at import
    ext_modules = []

setup(ext_modules=ext_modules)
