"""
Unit tests for KRel Lab.
"""

__all__ = []
