"""Exact computations on adjoint quotients of SU(n) and their Poisson structure."""

__version__ = "0.1.0"
