from setuptools import Extension, setup

# The compiled kernel is an optional speedup; the package falls back to the
# pure-Python implementation when the extension is absent.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("discarr._whitney", ["src/discarr/_whitney.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
