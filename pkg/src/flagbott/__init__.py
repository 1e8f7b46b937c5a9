"""Exact toolkit for GKM graphs of flag Bott manifolds and fans of generic
torus-orbit closures in associated flag Bott manifolds."""

__version__ = "0.1.0"
