"""Exact detection of bifurcation sets of bivariate real polynomials."""

__version__ = "0.1.0"
