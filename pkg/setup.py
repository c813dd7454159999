"""Build the optional compiled core.

``src/invgauss/_core.py`` is valid Python and is also compiled by Cython
into ``invgauss._core``.  If compilation is unavailable the package still
installs and runs on the interpreted core.
"""
import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("INVGAUSS_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "invgauss._core",
        ["src/invgauss/_core.py"],
        extra_compile_args=["-O3", "-fno-fast-math", "-ffp-contract=off"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
