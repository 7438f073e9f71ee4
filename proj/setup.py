import os

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("NPY_NUM_BUILD_JOBS").install()

here = os.path.dirname(os.path.abspath(__file__))
eigen = os.environ.get("EIGEN3_INCLUDE_DIR", "/usr/include/eigen3")

core_sources = [
    "src/lattice.cpp",
    "src/skewlinalg.cpp",
    "src/oracle.cpp",
    "src/spectral.cpp",
    "src/kasteleyn.cpp",
    "src/limits.cpp",
    "src/verify.cpp",
]

ext = Pybind11Extension(
    "hexpoly._hexpoly",
    sources=["python/bindings.cpp"] + core_sources,
    include_dirs=[os.path.join(here, "include"), eigen],
    cxx_std=20,
    extra_compile_args=["-O2"],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
