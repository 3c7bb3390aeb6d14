#!/usr/bin/env python

from setuptools import setup

with open('README.md', 'r') as readme:
    long_description = readme.read()

setup(
    name='valcone',
    version='1.0.0',
    description='Divisorial valuations of Hirzebruch surfaces: non-positivity at infinity and cones of curves',
    author='The valcone authors',
    license='GNU LGPL',
    platforms=['MacOS X', 'POSIX'],
    classifiers=[
        'Topic :: Scientific/Engineering :: Mathematics',
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        ('License :: OSI Approved :: GNU Library or '
         'Lesser General Public License (LGPL)'),
        'Operating System :: POSIX',
        'Operating System :: MacOS :: MacOS X',
        'Programming Language :: Python :: 3',
    ],
    long_description=long_description,
    long_description_content_type='text/markdown',
    python_requires='>=3.8',
    install_requires=[
        'packaging',
        'sympy',
    ],
    tests_require=[
        'tox',
        'hypothesis',
    ],
    packages=[
        'valcone',
        'valcone.cli',
    ],
    package_dir={
        '': 'src',
    },
    entry_points={
        'console_scripts': [
            'valcone = valcone.cli.frame:main',
        ],
    },
)
