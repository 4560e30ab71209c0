"""Build script: compiles the optional fast search kernel.

The package works without the extension (a pure-Python kernel with the same
behaviour is selected at import time), so a failed compile only costs speed.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


class optional_build_ext(build_ext):
    def run(self):
        try:
            build_ext.run(self)
        except (CCompilerError, ExecError, PlatformError, OSError) as exc:
            print(f"warning: skipping C extension build ({exc}); "
                  f"strongpack will use the pure-Python kernel")

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except (CCompilerError, ExecError, PlatformError, OSError) as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  f"strongpack will use the pure-Python kernel")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        ["src/strongpack/_fastcore.pyx"],
        compiler_directives={"language_level": "3", "boundscheck": False,
                             "wraparound": False, "cdivision": True},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
