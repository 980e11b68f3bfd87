"""Exact construction and verification of basic quasi-Hopf algebras over cyclic groups."""
__version__ = "0.1.0"
