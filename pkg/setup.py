from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [Extension("batlb._native", ["src/batlb/_native.pyx"])]

if cythonize is not None:
    setup(ext_modules=cythonize(extensions, language_level="3"))
else:
    # No Cython at build time: install pure; batlb.backend falls back at import.
    setup()
