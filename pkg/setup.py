# setup.py

"""
Module: Setup Configuration for the Airy Determinants Toolkit
Purpose:
    Packaging script for the toolkit: deformed Airy-kernel Fredholm determinants,
    their large-gap asymptotics, the steepest-descent scalars they are built from,
    and lower-tail bounds for the KPZ equation with narrow wedge initial data.

    Key Features:
    - Packages live under `src/`; the command-line entry point is `src/main.py`.
    - numpy and scipy are the only runtime dependencies.
    - The ``dev`` extra adds pytest and mpmath (the high-precision Airy oracle used by the tests).
    - Installs the ``airy-det`` console script.
"""
from setuptools import setup, find_packages  # Import necessary functions from setuptools for packaging.

setup(
    name="airy_determinants",
    version="0.1",

    # Sub-packages (quadrature_airy, sigma_models, fredholm_engine, ...) are discovered under `src/`.
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    # `main.py` is a top-level module, not a package.
    py_modules=["main"],

    install_requires=[
        "numpy>=1.20",  # Nystrom matrices, eigenvalues, Gauss-Legendre nodes
        "scipy>=1.7",   # expit/logsumexp for the weights, brentq for the endpoint equation
    ],

    extras_require={
        "dev": [
            "pytest",  # Test runner.
            "mpmath",  # Arbitrary-precision reference values for Airy functions.
        ]
    },

    # `airy-det det --x 1 --t 1` and friends.
    entry_points={
        "console_scripts": [
            "airy-det=main:main",
        ]
    },

    description="Deformed Airy-kernel Fredholm determinants, their asymptotics and KPZ lower-tail bounds",
    long_description=open("docs/README.md").read(),
    long_description_content_type="text/markdown",

    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],

    # logging.basicConfig(force=True) needs 3.8.
    python_requires='>=3.8',
)
"""
Packaging Considerations:

1. **Layout**:
   Each concern is its own package under `src/`: quadrature and Airy functions,
   weight models, the determinant engine, the steepest-descent scalars, the
   asymptotic formulas, the KPZ tail bounds and the command-line harness.
   Imports are absolute, so the packages work both installed and from a checkout
   with `src/` on the path (the tests do the latter through `tests/conftest.py`).

2. **Dependencies**:
   Everything numeric goes through numpy and scipy. mpmath is only needed to
   produce reference values in the tests and is therefore a development extra.

3. **Command-line Interface**:
   The ``airy-det`` script maps to `main.main`, which returns the process exit
   code (0 ok, 2 usage, 3 numeric failure, 4 output error).
"""
