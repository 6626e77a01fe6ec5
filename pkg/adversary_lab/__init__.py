"""Quantum query-model simulator and adversary lower-bound workbench."""

__version__ = "0.1.0"
