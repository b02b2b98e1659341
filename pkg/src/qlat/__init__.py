"""Exact verification toolkit for quaternionic tensor representations and the Barnes-Wall lattice."""

__version__ = "0.1.0"
