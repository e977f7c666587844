# Wheel build: compiles the core plus the binding in one extension, no
# CMake involved. Development builds and the test suites keep using CMake;
# this path exists so `pip install .` works from a bare checkout.

from glob import glob

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("HYPERGERM_BUILD_JOBS", default=4).install()

extension = Pybind11Extension(
    "hypergerm._hypergerm",
    sorted(glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include", "vendor"],
    libraries=["mpfr", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[extension], cmdclass={"build_ext": build_ext})
