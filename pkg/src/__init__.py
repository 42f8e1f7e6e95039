"""Orbit Audit package: floating-point reliability checks for chaotic maps."""

__version__ = "0.1.0"
__author__ = "Orbit Audit Developers"
__description__ = "Pseudo-orbit divergence certification for the logistic map"
