"""Deutsch paths: exact counting and closed-form verification for paths with arbitrary down-steps."""

__version__ = "1.0.0"
