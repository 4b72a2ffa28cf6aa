"""Hazard Rate - Country discount rates that price natural-hazard risk into hydrogen costs."""

__version__ = "0.1.0"
