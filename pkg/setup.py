# -*- coding: utf-8 -*-
import versioneer
from setuptools import setup, find_packages


install_requires = [
    'jinja2',
    'sympy',
    'mpmath',
    'gmpy2',
    ]
tests_require = [
    'hypothesis',
    ]
description = "Cubic and quartic Jacobi symbols in the Eisenstein and " \
              "Gaussian integers."
with open('README.rst') as readme:
    long_description = readme.read()

setup(
    name='eis-jacobi',
    version=versioneer.get_version(),
    author='eis-jacobi contributors',
    license='AGPL, See also LICENCE.txt',
    description=description,
    long_description=long_description,
    install_requires=install_requires,
    tests_require=tests_require,
    extras_require={'test': tests_require},
    packages=find_packages(),
    include_package_data=True,
    cmdclass=versioneer.get_cmdclass(),
    entry_points={
        'console_scripts': [
            'eis-jacobi = eisjacobi.cli:main',
            ],
        },
    test_suite='eisjacobi.tests',
    zip_safe=False,
    )
