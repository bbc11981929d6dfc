"""Exact computations for height-bounded Brauer diagram categories."""

__version__ = "0.1.0"
