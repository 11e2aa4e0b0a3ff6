"""Curves on closed surfaces, dividing sets and the slice calculus of Sigma x I."""

__version__ = "0.1.0"
