from setuptools import Extension, setup


def maybe_extensions():
    # The compiled kernel is an optional speedup; the pure-Python twin in
    # colorhom._core_py is always present, so missing Cython or a failed
    # compile must not break installation.
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("colorhom._core", ["src/colorhom/_core.pyx"], optional=True)
    return cythonize([ext], language_level="3")


setup(ext_modules=maybe_extensions())
