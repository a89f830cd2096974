import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PARITYSIGN_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "paritysign.kernels._cutkernel",
                    ["src/paritysign/kernels/_cutkernel.pyx"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        # No Cython: install the pure-Python fallback only.
        pass

setup(ext_modules=ext_modules)
