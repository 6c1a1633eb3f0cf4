"""Build hook for the optional compiled box-scan kernel.

The package is fully functional without the extension: gitstab.boxscan falls
back to a pure-Python scan at import time.  The compiled kernel only speeds up
large enumeration boxes, so any build failure here is downgraded to a warning.
Set GITSTAB_NO_EXT=1 to skip the extension entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that warns instead of failing when a compiler is missing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: skipping compiled extension ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: could not build {ext.name} ({exc})", file=sys.stderr)


ext_modules = []
if not os.environ.get("GITSTAB_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("gitstab._boxscan", ["src/gitstab/_boxscan.pyx"])],
            language_level="3",
        )
    except ImportError:
        print("warning: Cython not available, building without extension", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
