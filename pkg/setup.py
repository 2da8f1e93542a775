import os

from setuptools import Extension, find_packages, setup

# The compiled kernel is optional: without Cython (or with
# BRIDGEFORGE_PURE=1 at build time) the package installs with the pure
# Python fallback only.
ext_modules = []
if not os.environ.get("BRIDGEFORGE_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "bridgeforge._kernel._speed",
                    ["src/bridgeforge/_kernel/_speed.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

# Metadata lives in pyproject.toml; the kwargs below keep installs
# working under pre-PEP-621 setuptools.
setup(
    name="bridgeforge",
    version="0.1.0",
    package_dir={"": "src"},
    packages=find_packages("src"),
    package_data={"bridgeforge._kernel": ["*.pyx"]},
    install_requires=["mpmath>=1.2"],
    python_requires=">=3.10",
    entry_points={"console_scripts": ["bridgeforge = bridgeforge.cli:main"]},
    ext_modules=ext_modules,
)
