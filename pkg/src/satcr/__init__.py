"""Finite-field computations around saturation, complete reducibility and
Frobenius fixed points for reductive groups."""

__version__ = "0.1.0"
