"""Exact cohomological lower bounds for topological complexity and
Lusternik-Schnirelmann category of closed manifolds."""

__version__ = "0.1.0"
