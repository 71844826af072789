from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hypermorse._kernel._speedups",
                ["src/hypermorse/_kernel/_speedups.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # The compiled kernel is optional; the pure-Python twin is selected at
    # import when the extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
