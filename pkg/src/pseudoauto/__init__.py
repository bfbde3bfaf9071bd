"""Exact certification toolkit for a family of pseudo-automorphisms of rational threefolds."""

__version__ = "0.1.0"
