"""Finite relative categories: nerves, Rezk nerves, localizations, zigzag verification."""

__version__ = "0.1.0"
