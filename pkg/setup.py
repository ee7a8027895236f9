"""Build script for the optional compiled kernel.

The hot inner loops (permutation composition, word evaluation, point-set
translation) live in ``zariski._kernels``, a Cython extension.  The package
is fully functional without it: ``zariski._backend`` falls back to the
pure-Python twin ``zariski._kernels_py``, so a failed compile downgrades to
a warning instead of aborting the install.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext as _build_ext


class optional_build_ext(_build_ext):
    """build_ext that tolerates a missing or broken C toolchain."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            warnings.warn(f"could not build the C kernels ({exc}); "
                          "the pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - depends on toolchain
            warnings.warn(f"could not build {ext.name} ({exc}); "
                          "the pure-Python fallback will be used")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - Cython is a build requirement
        return []
    return cythonize(
        [Extension("zariski._kernels", ["src/zariski/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
