#!/usr/bin/python3
# File name   : setup.py
# Description : Install gsvindex and its command line tool
# Author      : gsvindex developers
# Date        : 2026/10/16
#
#   pip3 install .            library and the `gsvindex` command
#   pip3 install .[test]      plus pytest and sympy for the test suite

from setuptools import find_packages, setup

setup(
    name='gsvindex',
    version='1.0.0',
    description='Exact GSV index and contraction-complex homology of vector fields '
                'tangent to hypersurface singularities',
    long_description=open('README.md', encoding='utf-8').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests']),
    python_requires='>=3.8',
    install_requires=['psutil'],
    extras_require={'test': ['pytest', 'sympy']},
    entry_points={'console_scripts': ['gsvindex = gsvindex.cli:main']},
)
