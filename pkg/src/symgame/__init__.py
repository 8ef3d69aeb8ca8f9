"""Symmetry breaking-preserving games and Ehrenfeucht-Fraisse games on graphs."""

__version__ = "0.1.0"
