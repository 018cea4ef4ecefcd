"""Build script: compiles the optional exact-rank extension.

The package is fully functional without the extension (a pure-Python
big-integer kernel is selected at import time), so any build failure
here degrades to a source-only install instead of aborting.

Build in place for development:
    python setup.py build_ext --inplace
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: building the rank extension failed ({exc}); "
              "falling back to the pure-Python kernel.")


ext_modules = []
if os.environ.get("TREELINE_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("treeline._rank_c", ["src/treeline/_rank_c.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
