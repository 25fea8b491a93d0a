"""setuptools -> CMake bridge: builds the _zetakirch extension with the same
CMakeLists that drives the C++ build (configured with ZETAKIRCH_PYTHON_ONLY)."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        import pybind11

        extdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).resolve().parent
        cfg = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                f"-DCMAKE_BUILD_TYPE={cfg}",
                "-DZETAKIRCH_PYTHON_ONLY=ON",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}",
                f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
                f"-DPYTHON_EXECUTABLE={sys.executable}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_zetakirch",
             "--parallel", str(os.cpu_count() or 2)],
            cwd=build_dir,
            check=True,
        )


setup(
    packages=["zetakirch"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("zetakirch._zetakirch")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
