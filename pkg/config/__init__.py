"""
Configuration files for KRel Lab.
"""
