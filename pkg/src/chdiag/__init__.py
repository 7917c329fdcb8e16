"""Enumeration and analysis of marked graph diagrams of surface-links."""

__version__ = "0.1.0"
