from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    import numpy
except ImportError:  # pure-Python install; kernels.py falls back
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("lcfhomology._ckernels", ["src/lcfhomology/_ckernels.pyx"],
                   include_dirs=[numpy.get_include()])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
