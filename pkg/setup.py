# setup.py
from setuptools import setup, find_packages

setup(
    name="hodge-degree-zero",
    version="1.0.0",
    description="Exact psi-lambda Hodge integrals, universal W_g functions and degree-zero GW free energies of curves",
    author="Your Name",
    author_email="your.email@example.com",
    packages=find_packages(exclude=["tests", "tests.*"]),
    py_modules=["main", "dependencies"],
    install_requires=[
        "pydantic>=2.4.2",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-asyncio>=0.20.0",
            "pytest-cov>=4.0.0",
            "pytest-mock>=3.10.0",
            "sympy>=1.12",
        ]
    },
    entry_points={
        "console_scripts": [
            "hodge-degree-zero=main:main",
        ]
    },
    python_requires=">=3.10",
)
