from setuptools import setup, find_packages


# find packages in torcs subdirectory
# this will skip the unittests, etc.
packages = ['torcs.'+pkg for pkg in find_packages('torcs')]
packages.append('torcs')

install_requires=[
        'mpmath',
        'numpy',
        'progressbar2',
    ]

setup(
    name = "torcs",
    version = "0.1.0",
    description = ('Abelian Reshetikhin-Turaev and toral Chern-Simons '\
                   'invariants of 3-manifolds from integral surgery'),
    keywords = ['topology', 'quantum invariants', 'lattices', 'Gauss sums'],
    # https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers = [
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        ],
    install_requires=install_requires,
    python_requires='>=3.5',
    license = 'MIT',
    packages=packages,
    zip_safe = False,
    package_data = {'torcs': ['fixtures/manifest.txt']},
    entry_points = {
        'console_scripts': ['torcs = torcs.cli:main'],
    },
    test_suite = "unittest2.collector",
    tests_require=['unittest2'],
)
