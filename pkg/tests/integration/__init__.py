"""
Integration tests for KRel Lab.
"""

__all__ = []