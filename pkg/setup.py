"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
implementation of every kernel ships alongside it), so any failure to
cythonize or compile downgrades to a warning instead of aborting the
install.  Set PRYMBN_PURE_PYTHON=1 to skip the extension entirely.
"""

from __future__ import annotations

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """A build_ext that degrades to a no-op when compilation fails."""

    def run(self) -> None:
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
            self._warn(exc)

    def build_extension(self, ext: Extension) -> None:
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            self._warn(exc)

    @staticmethod
    def _warn(exc: Exception) -> None:
        print(
            f"WARNING: building the accelerated kernels failed ({exc!r}); "
            "falling back to the pure-Python implementation.",
            file=sys.stderr,
        )


def extensions() -> list[Extension]:
    if os.environ.get("PRYMBN_PURE_PYTHON"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover
        print(
            "WARNING: Cython is unavailable; installing without accelerated kernels.",
            file=sys.stderr,
        )
        return []
    ext = Extension("prymbn._ckernels", sources=["src/prymbn/_ckernels.pyx"])
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
