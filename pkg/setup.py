import glob
import os

from setuptools import Extension, setup


def compiled_kernels():
    """The GMP kernel extension, or nothing when gmpy2/Cython are unavailable."""
    try:
        import gmpy2
        from Cython.Build import cythonize
    except ImportError:
        return []
    pkg_dir = os.path.dirname(gmpy2.__file__)
    libs_dir = pkg_dir + ".libs"
    # link the libgmp copy gmpy2 itself loads so both share one allocator
    bundled = sorted(glob.glob(os.path.join(libs_dir, "libgmp*.so*")))
    if bundled:
        libraries, link_args = [], [bundled[0], f"-Wl,-rpath,{libs_dir}"]
    else:
        libraries, link_args = ["gmp"], []
    ext = Extension(
        "qumbral._ckernels",
        ["src/qumbral/_ckernels.pyx"],
        include_dirs=[pkg_dir],
        libraries=libraries,
        extra_link_args=link_args,
        extra_compile_args=["-O2"],
        optional=True,
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=compiled_kernels())
