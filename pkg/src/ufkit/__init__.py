"""ufkit: a checker for Martin-Lof type theory with a universe, and finite models of it."""

__version__ = "0.1.0"
