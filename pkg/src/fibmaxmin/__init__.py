"""Exact max-min computations for distances of Fibonacci multiples to the integers."""

__version__ = "0.1.0"
