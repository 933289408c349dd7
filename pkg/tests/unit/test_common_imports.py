"""
Unit tests for the common_imports module.
"""

import importlib
import sys
from unittest.mock import patch


def test_common_imports_structure():
    """The availability flag exists and is a boolean."""
    import app.utils.common_imports as common_imports

    assert hasattr(common_imports, 'PERFORMANCE_MONITORING_AVAILABLE')
    assert isinstance(common_imports.PERFORMANCE_MONITORING_AVAILABLE, bool)
    assert 'PERFORMANCE_MONITORING_AVAILABLE' in common_imports.__all__


def test_psutil_exported_only_when_available():
    import app.utils.common_imports as common_imports

    if common_imports.PERFORMANCE_MONITORING_AVAILABLE:
        assert common_imports.psutil is not None
        assert 'psutil' in common_imports.__all__
    else:
        assert common_imports.psutil is None
        assert 'psutil' not in common_imports.__all__


def test_missing_psutil_is_tolerated():
    """Without psutil the module still imports and reports the flag as False."""
    import app.utils.common_imports as common_imports

    with patch.dict(sys.modules, {'psutil': None}):
        reloaded = importlib.reload(common_imports)
        assert reloaded.PERFORMANCE_MONITORING_AVAILABLE is False
        assert reloaded.psutil is None
    importlib.reload(common_imports)
