"""Build script: compiles the optional KL kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time), so a missing compiler or Cython only costs speed, not features.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    import numpy as np

    ext_modules = cythonize(
        "src/diracoh/_klcore.pyx",
        language_level="3",
    )
    for ext in ext_modules:
        ext.include_dirs.append(np.get_include())
except ImportError:
    pass

setup(ext_modules=ext_modules)
