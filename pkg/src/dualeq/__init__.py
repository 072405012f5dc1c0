"""Dual equivalence graphs with LLT and Macdonald Schur expansions."""

__version__ = "0.1.0"
