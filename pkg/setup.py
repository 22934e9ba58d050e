"""Build hook: compile the Cython day-loop kernel when a toolchain exists.

The package is fully functional without the extension (wealthsim.backends
falls back to the vectorized numpy kernel), so any build failure here is
deliberately non-fatal for source installs without a compiler.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension(
            "wealthsim._kernels",
            ["src/wealthsim/_kernels.pyx"],
            include_dirs=[numpy.get_include()],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            extra_compile_args=["-O3"],
        )],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
