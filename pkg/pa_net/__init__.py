"""Directed preferential attachment with Poisson measurement: simulators, limit laws and fitting."""

__version__ = "0.1.0"
