"""
Test package for KRel Lab.
"""

__version__ = "1.0.0"
