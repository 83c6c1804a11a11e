"""Build script for the compiled trainer kernels.

The extension is optional: if Cython or a C compiler is unavailable the
install proceeds and `ibl.engine` falls back to the pure-Python kernels at
import time. Floating-point contraction is disabled so the compiled loops
produce bit-identical trajectories to the fallback.
"""

from setuptools import setup, Extension
from setuptools.command.build_ext import build_ext
from distutils.errors import CCompilerError, DistutilsExecError, DistutilsPlatformError


class optional_build_ext(build_ext):
    def run(self):
        try:
            build_ext.run(self)
        except (CCompilerError, DistutilsExecError, DistutilsPlatformError) as exc:
            print(f"WARNING: compiled kernels skipped ({exc}); pure-Python engine will be used")

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except (CCompilerError, DistutilsExecError, DistutilsPlatformError) as exc:
            print(f"WARNING: {ext.name} skipped ({exc}); pure-Python engine will be used")


def extensions():
    try:
        import numpy as np
        from Cython.Build import cythonize
    except ImportError as exc:
        print(f"WARNING: compiled kernels skipped ({exc}); pure-Python engine will be used")
        return []
    ext = Extension(
        "ibl._kernels",
        ["src/ibl/_kernels.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
