"""Constructions and connected-homogeneity checks for highly symmetric finite graphs."""

__version__ = "0.1.0"
