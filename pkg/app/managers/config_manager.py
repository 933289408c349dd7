import json
import logging
from pathlib import Path
from typing import Dict, Any, Optional

from ..utils.constants import (
    LOGGER_NAME, DEFAULT_CONFIG_PATH, DEFAULT_REGRESSION_PATH, DEFAULT_INSTANCE,
    DEFAULT_VARIABLES, DEFAULT_DIFF_SEMANTICS, DEFAULT_SEED, DEFAULT_AXIOM_TRIALS,
    DEFAULT_IDENTITY_TRIALS, DEFAULT_REGISTRATION_SAMPLES, DEFAULT_SAMPLE_SIZE,
    DEFAULT_MAX_TUPLES, DEFAULT_DOMAIN_SIZE, DEFAULT_SCHEMA_WIDTH, DEFAULT_NAT_BOUND,
    DEFAULT_TROPICAL_BOUND, DEFAULT_FUZZ_GRID, DEFAULT_OUTPUT_FORMAT, DEFAULT_WORKERS,
    DEFAULT_LOG_OUTPUT, DEFAULT_LOG_LEVEL, DEFAULT_LOG_FILE_PATH,
)


class ConfigManager:
    """Manages the lab configuration: defaults merged with an optional JSON file."""

    def __init__(self, config_path: Optional[Path] = None):
        self.config_path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
        self.logger = logging.getLogger(LOGGER_NAME)
        self.config: Dict[str, Any] = self._get_default_config()
        self.load_config()

    def _get_default_config(self) -> Dict[str, Any]:
        """Returns the default configuration structure."""
        return {
            "default_instance": DEFAULT_INSTANCE,
            "variables": list(DEFAULT_VARIABLES),
            "diff_semantics": DEFAULT_DIFF_SEMANTICS,
            "seed": DEFAULT_SEED,
            "axiom_trials": DEFAULT_AXIOM_TRIALS,
            "identity_trials": DEFAULT_IDENTITY_TRIALS,
            "registration_samples": DEFAULT_REGISTRATION_SAMPLES,
            "sample_size": DEFAULT_SAMPLE_SIZE,
            "max_tuples": DEFAULT_MAX_TUPLES,
            "domain_size": DEFAULT_DOMAIN_SIZE,
            "schema_width": DEFAULT_SCHEMA_WIDTH,
            "bounded_nat": DEFAULT_NAT_BOUND,
            "bounded_tropical": DEFAULT_TROPICAL_BOUND,
            "fuzz_grid": DEFAULT_FUZZ_GRID,
            "output_format": DEFAULT_OUTPUT_FORMAT,
            "workers": DEFAULT_WORKERS,
            "allow_order4": False,
            "regression_path": DEFAULT_REGRESSION_PATH,
            "log_output": DEFAULT_LOG_OUTPUT,
            "log_level": DEFAULT_LOG_LEVEL,
            "log_file_path": DEFAULT_LOG_FILE_PATH,
        }

    def load_config(self):
        """Loads configuration from the JSON file."""
        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                loaded_config = json.load(f)
            if not isinstance(loaded_config, dict):
                raise json.JSONDecodeError("top-level value must be an object", "", 0)
            temp_config = self._get_default_config()
            temp_config.update(loaded_config)
            self.config = temp_config
            self.logger.info(f"Configuration successfully loaded from {self.config_path}")
        except FileNotFoundError:
            self.logger.info(f"Configuration file not found at {self.config_path}. Using default configuration.")
        except json.JSONDecodeError as e:
            self.logger.error(f"Error decoding JSON from configuration file {self.config_path}: {e}. Using default configuration.")
            self.config = self._get_default_config()
        except Exception as e:
            self.logger.error(f"Unexpected error loading configuration from {self.config_path}: {e}. Using default configuration.", exc_info=True)
            self.config = self._get_default_config()

    def save_config(self):
        """Saves the current configuration to the JSON file."""
        try:
            self.config_path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.config_path, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, indent=2)
            self.logger.info(f"Configuration successfully saved to {self.config_path}")
        except Exception as e:
            self.logger.error(f"Error saving configuration to {self.config_path}: {e}", exc_info=True)

    def get(self, key: str, default: Any = None) -> Any:
        return self.config.get(key, default)

    def update_config(self, updates: Dict[str, Any]):
        """Applies updates in memory; call save_config() to persist."""
        self.config.update(updates)
        self.logger.debug(f"Configuration updated: {sorted(updates)}")
