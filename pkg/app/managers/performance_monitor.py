"""
Performance monitoring for long-running lab jobs.

Enumeration, the A13 classification and axiom suites run inside `track()`,
which logs elapsed time and, when psutil is installed, memory usage.
"""

import os
import time
import logging
from contextlib import contextmanager
from typing import Dict, Any, Iterator, Optional

from ..utils.common_imports import PERFORMANCE_MONITORING_AVAILABLE
from ..utils.constants import LOGGER_NAME, MEMORY_BYTES_TO_MB, MEMORY_THRESHOLD_MB

if PERFORMANCE_MONITORING_AVAILABLE:
    from ..utils.common_imports import psutil
else:
    psutil = None


class PerformanceMonitor:
    """Monitors elapsed time and process resources."""

    def __init__(self):
        self.logger = logging.getLogger(LOGGER_NAME)
        self._process = None

        if PERFORMANCE_MONITORING_AVAILABLE and psutil:
            try:
                self._process = psutil.Process(os.getpid())
                self.logger.debug("Performance monitoring initialized with psutil")
            except Exception as e:
                self.logger.warning(f"Failed to initialize performance monitoring: {e}")
                self._process = None
        else:
            self.logger.debug("Performance monitoring not available (psutil not installed)")

    def get_memory_usage(self) -> Optional[float]:
        """Current resident memory in MB, or None without psutil."""
        if not self._process:
            return None
        try:
            return self._process.memory_info().rss / MEMORY_BYTES_TO_MB
        except Exception as e:
            self.logger.warning(f"Failed to get memory usage: {e}")
            return None

    def get_cpu_usage(self) -> Optional[float]:
        if not self._process:
            return None
        try:
            return self._process.cpu_percent(interval=None)
        except Exception as e:
            self.logger.warning(f"Failed to get CPU usage: {e}")
            return None

    def get_performance_snapshot(self) -> Dict[str, Any]:
        return {
            'monitoring_available': bool(self._process),
            'memory_usage_mb': self.get_memory_usage(),
            'cpu_percent': self.get_cpu_usage(),
        }

    def check_memory_threshold(self, threshold_mb: float = MEMORY_THRESHOLD_MB) -> bool:
        memory_usage = self.get_memory_usage()
        if memory_usage is None:
            return False
        return memory_usage > threshold_mb

    def is_performance_monitoring_available(self) -> bool:
        return bool(self._process)

    @contextmanager
    def track(self, operation: str) -> Iterator[Dict[str, Any]]:
        """
        Times the enclosed block and logs the result.

        Yields a dict that receives `elapsed_seconds` (and `memory_usage_mb`
        when available) once the block exits.
        """
        stats: Dict[str, Any] = {"operation": operation}
        started = time.perf_counter()
        try:
            yield stats
        finally:
            stats["elapsed_seconds"] = time.perf_counter() - started
            memory_mb = self.get_memory_usage()
            if memory_mb is not None:
                stats["memory_usage_mb"] = memory_mb
                self.logger.info(f"'{operation}' took {stats['elapsed_seconds']:.3f}s, memory {memory_mb:.1f}MB")
                if memory_mb > MEMORY_THRESHOLD_MB:
                    self.logger.warning(f"Memory usage above {MEMORY_THRESHOLD_MB:.0f}MB after '{operation}'")
            else:
                self.logger.info(f"'{operation}' took {stats['elapsed_seconds']:.3f}s")


# Global performance monitor instance
_performance_monitor = None


def get_performance_monitor() -> PerformanceMonitor:
    """Get the global performance monitor instance."""
    global _performance_monitor
    if _performance_monitor is None:
        _performance_monitor = PerformanceMonitor()
    return _performance_monitor
