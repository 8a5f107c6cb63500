"""Build script: compiles the optional accelerator extension.

The package is fully functional without the extension (a pure-Python kernel
is selected at import time), so any failure to cythonize or compile degrades
to a pure build instead of aborting the install.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"skipping compiled kernel, falling back to pure Python: {exc}")
            self.extensions = []

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"failed to build {ext.name}, falling back to pure Python: {exc}")


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available, building without the compiled kernel")
        return []
    return cythonize(
        [Extension("adlv._kernel", ["src/adlv/_kernel.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
