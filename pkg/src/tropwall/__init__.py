"""Tropicalizations, toric degenerations, Newton-Okounkov bodies and wall-crossing maps."""

__version__ = "0.1.0"
