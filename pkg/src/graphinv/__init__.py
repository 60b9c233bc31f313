"""Exact metric dimension and zero forcing computations for small graphs."""

__version__ = "0.1.0"
