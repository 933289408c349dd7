"""
Unit tests for the performance_monitor module.
"""

import pytest
from unittest.mock import patch, MagicMock
from app.managers.performance_monitor import PerformanceMonitor, get_performance_monitor


class TestPerformanceMonitorInitialization:
    """Test PerformanceMonitor initialization and basic functionality."""

    def test_get_performance_monitor_singleton(self):
        """Test that get_performance_monitor returns a singleton."""
        monitor1 = get_performance_monitor()
        monitor2 = get_performance_monitor()

        assert monitor1 is monitor2
        assert isinstance(monitor1, PerformanceMonitor)

    def test_performance_monitor_with_psutil_available(self):
        """Test PerformanceMonitor when psutil is available."""
        with patch('app.managers.performance_monitor.PERFORMANCE_MONITORING_AVAILABLE', True):
            with patch('app.managers.performance_monitor.psutil') as mock_psutil:
                mock_process = MagicMock()
                mock_psutil.Process.return_value = mock_process

                monitor = PerformanceMonitor()

                assert monitor._process == mock_process
                assert monitor.is_performance_monitoring_available()

    def test_performance_monitor_without_psutil(self):
        """Test PerformanceMonitor when psutil is not available."""
        with patch('app.managers.performance_monitor.PERFORMANCE_MONITORING_AVAILABLE', False):
            with patch('app.managers.performance_monitor.psutil', None):
                monitor = PerformanceMonitor()

                assert monitor._process is None
                assert not monitor.is_performance_monitoring_available()

    def test_performance_monitor_psutil_error_handling(self):
        """Test PerformanceMonitor handles psutil errors gracefully."""
        with patch('app.managers.performance_monitor.PERFORMANCE_MONITORING_AVAILABLE', True):
            with patch('app.managers.performance_monitor.psutil') as mock_psutil:
                mock_psutil.Process.side_effect = Exception("psutil error")

                monitor = PerformanceMonitor()

                assert monitor._process is None


class TestPerformanceMonitorMethods:
    """Test individual PerformanceMonitor methods."""

    def _monitor_with_rss(self, rss_bytes):
        with patch('app.managers.performance_monitor.PERFORMANCE_MONITORING_AVAILABLE', True):
            with patch('app.managers.performance_monitor.psutil') as mock_psutil:
                mock_process = MagicMock()
                mock_process.memory_info.return_value = MagicMock(rss=rss_bytes)
                mock_process.cpu_percent.return_value = 12.5
                mock_psutil.Process.return_value = mock_process
                return PerformanceMonitor()

    def test_get_memory_usage_with_psutil(self):
        """Test get_memory_usage converts bytes to MB."""
        monitor = self._monitor_with_rss(104857600)  # 100 MB in bytes
        assert monitor.get_memory_usage() == 100.0

    def test_get_memory_usage_without_psutil(self):
        with patch('app.managers.performance_monitor.PERFORMANCE_MONITORING_AVAILABLE', False):
            monitor = PerformanceMonitor()
        assert monitor.get_memory_usage() is None
        assert monitor.get_cpu_usage() is None

    def test_memory_error_is_swallowed(self):
        monitor = self._monitor_with_rss(0)
        monitor._process.memory_info.side_effect = Exception("gone")
        assert monitor.get_memory_usage() is None

    def test_snapshot(self):
        monitor = self._monitor_with_rss(2 * 1024 * 1024)
        snapshot = monitor.get_performance_snapshot()
        assert snapshot == {'monitoring_available': True, 'memory_usage_mb': 2.0, 'cpu_percent': 12.5}

    def test_check_memory_threshold(self):
        monitor = self._monitor_with_rss(600 * 1024 * 1024)
        assert monitor.check_memory_threshold(500.0)
        assert not monitor.check_memory_threshold(700.0)


class TestTrack:
    """The timing context manager used around long lab jobs."""

    def test_track_records_elapsed_time(self):
        monitor = PerformanceMonitor()
        with monitor.track("census") as stats:
            pass
        assert stats["operation"] == "census"
        assert stats["elapsed_seconds"] >= 0

    def test_track_records_memory_when_available(self):
        monitor = TestPerformanceMonitorMethods()._monitor_with_rss(3 * 1024 * 1024)
        with monitor.track("table3") as stats:
            pass
        assert stats["memory_usage_mb"] == 3.0

    def test_track_finishes_on_error(self):
        monitor = PerformanceMonitor()
        with pytest.raises(RuntimeError):
            with monitor.track("failing") as stats:
                raise RuntimeError("boom")
        assert "elapsed_seconds" in stats
