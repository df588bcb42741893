#!/usr/bin/env python

# How to build source distribution
#   - python setup.py sdist --format gztar
#   - python setup.py bdist_wheel


import os
import sys

from setuptools import setup, find_packages


MAJOR = 0
MINOR = 1
MICRO = 0
VERSION = "{0}.{1}.{2}".format(MAJOR, MINOR, MICRO)


def check_python_version():
    """Checks the python version, exits if < 3.8."""
    python_major, python_minor = sys.version_info[:2]

    if python_major != 3 or python_minor < 8:
        sys.stderr.write("preclones requires python 3 "
                         "(version 3.8 or higher)\n")
        sys.exit(1)


def write_version_file(fn=None):
    if fn is None:
        fn = os.path.join(
            os.path.dirname(os.path.abspath(__file__)),
            os.path.join("preclones", "version.py"),
        )

    content = ("\n# THIS FILE WAS GENERATED AUTOMATICALLY\n"
               'preclones_version = "{version}"\n')

    with open(fn, "w") as f:
        f.write(content.format(version=VERSION))


def setup_package():
    # Checking the python version prior to installation
    check_python_version()

    # Saving the version into a file
    write_version_file()

    setup(
        name="preclones",
        version=VERSION,
        description="Preclones of operations and matrix collections on "
                    "finite sets.",
        license="MIT",
        test_suite="preclones.tests.test_suite",
        zip_safe=False,
        install_requires=["numpy >= 1.17.0", "pandas >= 0.25.0",
                          "setuptools >= 26.1.0"],
        extras_require={"test": ["hypothesis >= 5.0", "coverage"]},
        entry_points={
            "console_scripts": ["preclones=preclones.cli.__main__:main"],
        },
        packages=find_packages(),
        classifiers=["Development Status :: 3 - Alpha",
                     "Intended Audience :: Science/Research",
                     "License :: OSI Approved :: MIT License",
                     "Operating System :: OS Independent",
                     "Programming Language :: Python",
                     "Programming Language :: Python :: 3",
                     "Topic :: Scientific/Engineering :: Mathematics"],
        keywords="universal algebra clones preclones galois connection",
    )


if __name__ == "__main__":
    setup_package()
