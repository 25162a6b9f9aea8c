#!/usr/bin/env python
"""
frechetrans
===========

Discrete Frechet distance under translation, offline dynamic grid
reachability and the 4-OV hardness construction.
"""
import os
from setuptools import setup

# Utility function to read the README file.
# Used for the long_description.
def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()

setup(
    name = "frechetrans",
    version = "0.1",
    author = "frechetrans contributors",
    description = ('Discrete Frechet distance under translation in the plane'),
    license = "MIT",
    keywords = "frechet distance translation curves grid reachability",
    packages=['frechetrans'],
    long_description=read('README'),
    install_requires=[
        'numpy',
        'scipy',
        'networkx',
        'sortedcontainers',
        'shapely',
    ],
    tests_require=['mock', 'coverage'],
    entry_points={
        'console_scripts': ['frechetrans=frechetrans.cli:main'],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
    ],
)
