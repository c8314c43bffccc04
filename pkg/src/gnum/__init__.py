"""Exact arithmetic of finite simple graphs under the strong product."""

__version__ = "0.1.0"
