"""Adaptive device-interaction engine for accessible motion-driven activities."""

__version__ = "0.1.0"
