"""Exact symbolic verification engine for strand-indexed homotopy algebra."""

__version__ = "0.1.0"
