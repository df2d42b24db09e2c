"""Exact toolkit for rational plane curves, their duals and complement hyperbolicity gates."""

__version__ = "0.1.0"
