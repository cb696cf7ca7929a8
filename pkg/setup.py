#!/usr/bin/env python
from setuptools import setup, find_packages


if __name__ == "__main__":
    setup(name='vrcheck',
          version='0.1.0',
          description=('Value restriction and not-strict value restriction '
                       'of weak-ordering profiles via possibility '
                       'preference maps.'),
          packages=find_packages(),
          python_requires='>=3.8',
          install_requires=['numpy>=1.17', 'astropy>=4.0'],
          setup_requires=['pytest-runner'],
          tests_require=['pytest', 'hypothesis'],
          entry_points={
              'console_scripts': ['vrcheck = vrcheck.cli:main'],
          },
          license='BSD',
          )
