"""
Centralized optional imports.
Resource monitoring is optional; the lab runs without it.
"""

# Optional performance monitoring support
try:
    import psutil
    PERFORMANCE_MONITORING_AVAILABLE = True
except ImportError:
    psutil = None
    PERFORMANCE_MONITORING_AVAILABLE = False

__all__ = ['PERFORMANCE_MONITORING_AVAILABLE']

if PERFORMANCE_MONITORING_AVAILABLE:
    __all__.append('psutil')
