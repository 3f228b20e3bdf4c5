"""Build script for the optional compiled scan kernel.

The package is pure Python except for ``jsplit._scan_cy``, which accelerates
the quartic identity scans.  If the extension cannot be built (no compiler,
no Cython), installation still succeeds and the pure-Python fallback is used.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing: fall back to pure Python
            print(f"warning: compiled kernel not built ({exc}); "
                  "jsplit will use the pure-Python scan backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); "
                  "jsplit will use the pure-Python scan backend")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        ["src/jsplit/_scan_cy.pyx"],
        language_level=3,
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
