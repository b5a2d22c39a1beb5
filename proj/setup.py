from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "ecoh._ecoh",
        sorted(glob("src/*.cpp")) + ["bindings/py_module.cpp"],
        include_dirs=["include", "vendor"],
        cxx_std=20,
    ),
]

setup(
    ext_modules=ext_modules,
    cmdclass={"build_ext": build_ext},
    packages=["ecoh"],
    package_dir={"ecoh": "python/ecoh"},
)
