"""Exact structures, closure operators and tilting mutation for type A quivers."""

__version__ = "0.1.0"
