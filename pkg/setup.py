"""Build script for the compiled tic-loop kernel.

The extension is optional: if Cython or a C compiler is unavailable the
install falls back to the pure-Python kernel (selected at import time in
udnsim.kernel). Set UDNSIM_NO_EXT=1 to skip the extension build entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Try to build the C kernel, warn and continue on failure."""

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
        sys.stderr.write(
            f"WARNING: building the compiled kernel failed ({exc}); "
            "udnsim will run on the pure-Python fallback.\n"
        )


def extensions():
    if os.environ.get("UDNSIM_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        sys.stderr.write("WARNING: Cython not available, skipping compiled kernel.\n")
        return []
    return cythonize(
        [
            Extension(
                "udnsim._kernel",
                ["src/udnsim/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
