#!/usr/bin/env python

import os
from setuptools import setup, find_packages

work_dir = os.path.dirname(os.path.realpath(__file__))

with open(os.path.join(work_dir, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

INSTALL_REQUIRES = []

TEST_REQUIRES = [
    'pytest>=7.0.0',
    'pytest-timeout',
    'hypothesis',
    'flake8'
]

DOC_REQUIRES = ['sphinx', 'sphinx-rtd-theme']

trove_classifiers = [
    'Development Status :: 4 - Beta',
    'Intended Audience :: Education',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: Apache Software License',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering :: Mathematics',
]

setup(name='countable-sets',
      # Make sure to bump _VERSION in src/countable/__init__.py
      # and version in docs/conf.py.
      version='1.0.0',
      description='Executable countability arguments: bijections, enumerations, '
                  'Hilbert\'s hotel and diagonalization',
      author='The countable-sets Authors',
      long_description=long_description,
      long_description_content_type='text/markdown',
      packages=find_packages('src'),
      package_dir={'': 'src'},
      python_requires='>=3.8',
      install_requires=INSTALL_REQUIRES,
      classifiers=trove_classifiers,
      entry_points={
          'console_scripts': ['countable = countable.cli:main'],
      },
      extras_require={
          'dev': TEST_REQUIRES,
          'doc': DOC_REQUIRES
      })
