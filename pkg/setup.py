import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("ALCOVE_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("alcove._ddcore", ["src/alcove/_ddcore.pyx"],
                       extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: install with the pure-Python kernel only.
        ext_modules = []

setup(ext_modules=ext_modules)
