"""CDAWG construction and an empirical laboratory for its edit sensitivity."""

__version__ = "0.1.0"
