import json
import logging
from pathlib import Path
from typing import Dict, Any, Optional, Tuple

from ..utils.constants import (
    LOGGER_NAME, DEFAULT_REGRESSION_PATH,
    STATUS_REGRESSION_RECORDED, STATUS_REGRESSION_MISMATCH,
)


class RegressionStore:
    """
    Persists enumeration census counts keyed by carrier order.

    The first run for an order records its counts; later runs compare against
    the stored values.
    """

    def __init__(self, store_path: Optional[Path] = None):
        self.store_path = Path(store_path or DEFAULT_REGRESSION_PATH)
        self.logger = logging.getLogger(LOGGER_NAME)
        self.values: Dict[str, Dict[str, Any]] = {}
        self.load()

    def load(self):
        try:
            with open(self.store_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
            self.values = data if isinstance(data, dict) else {}
        except FileNotFoundError:
            self.values = {}
        except json.JSONDecodeError as e:
            self.logger.error(f"Corrupt regression store {self.store_path}: {e}. Starting empty.")
            self.values = {}

    def save(self):
        try:
            self.store_path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.store_path, 'w', encoding='utf-8') as f:
                json.dump(self.values, f, indent=2, sort_keys=True)
        except OSError as e:
            self.logger.error(f"Error saving regression store {self.store_path}: {e}")

    def get(self, order: int) -> Optional[Dict[str, Any]]:
        return self.values.get(str(order))

    def check_or_record(self, order: int, counts: Dict[str, Any]) -> Tuple[str, Optional[Dict[str, Any]]]:
        """
        Returns ("recorded", None), ("match", stored) or ("mismatch", stored).
        """
        stored = self.get(order)
        if stored is None:
            self.values[str(order)] = dict(counts)
            self.save()
            self.logger.info(STATUS_REGRESSION_RECORDED.format(order))
            return "recorded", None
        if stored == dict(counts):
            return "match", stored
        self.logger.warning(STATUS_REGRESSION_MISMATCH.format(order, stored, dict(counts)))
        return "mismatch", stored
