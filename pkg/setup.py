# -*- coding:utf-8 -*-

from setuptools import setup


setup(
    name="hnrkit",
    version="0.1.0",
    packages=[
        "hnrkit",
        "hnrkit.utils",
        "hnrkit.family",
    ],
    description="Barrier geometry of minimal hypersurfaces in H^n x R: catenoids, translation-invariant "
                "barriers, maximum-principle sweeps and non-existence checks.",
    license="MIT",
    keywords=[
        "hnrkit", "minimal surface", "hyperbolic space", "catenoid", "barrier", "maximum principle", "quadrature"
    ],
    python_requires=">=3.7",
    install_requires=[
        "numpy>=1.17",
        "scipy>=1.4"
    ],
    extras_require={
        "test": ["pytest>=6.0", "hypothesis>=5.0"]
    },
    entry_points={
        "console_scripts": ["hnrkit=hnrkit.cli:main"]
    },
)
