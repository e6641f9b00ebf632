"""Builds the optional compiled kernels.

The package is fully functional without them (pure-Python twins are
selected at import time), so a failed extension build only costs speed.
Set LRPOS_NO_EXT=1 to skip the extensions entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):
    """Carry on with the pure-Python install if compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, etc.
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"warning: building compiled kernels failed ({exc}); "
              "falling back to the pure-Python kernels")


extensions = [
    Extension("lrpos._simplex_cy", ["src/lrpos/_simplex_cy.pyx"]),
    Extension("lrpos._enum_cy", ["src/lrpos/_enum_cy.pyx"]),
]

if cythonize is not None and os.environ.get("LRPOS_NO_EXT") != "1":
    ext_modules = cythonize(
        extensions, compiler_directives={"language_level": "3"}
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
