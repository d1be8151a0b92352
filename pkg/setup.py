"""This module is for the package setup."""

from setuptools import setup, find_packages

setup(
    name="hkltower",
    version="1.0.0",
    description="Exact lattice and divisor arithmetic for the D-tower",
    packages=find_packages(exclude=["tests"]),
    install_requires=["sympy>=1.14"],
    extras_require={
        "dev": [
            "black==23.1.0",
            "flake8==4.0.1",
            "pydocstyle==6.3.0",
            "pytest>=7.4",
            "twine>=4.0.2",
        ]
    },
    entry_points={"console_scripts": ["hkltower = hkltower.cli.main:main"]},
    python_requires=">=3.10",
)
