"""Exact-arithmetic Groebner kernel and transition-system verifier for the
classical, skew-symmetric, and symmetric matrix Schubert ideal families."""

__version__ = "0.1.0"
