"""Build script: compiles the optional token-scanner extension.

The package works without the extension (a pure-Python scanner is selected
at import time); set FORMALITY3_PURE=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("FORMALITY3_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "formality3._scan_c",
                    ["src/formality3/_scan_c.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
