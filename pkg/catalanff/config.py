"""
Configuration Module for catalanff.

This module provides configuration handling for catalanff runs,
including loading and validating YAML configuration files and applying
environment overrides for the enumeration budgets.
"""

import os
import copy
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from .exceptions import ConfigurationError

# Set up logging
logger = logging.getLogger(__name__)

CONFIG_FILENAME = "catalanff_config.yaml"

BUDGET_ENV = "CATALANFF_BUDGET"
POINT_BUDGET_ENV = "CATALANFF_POINT_BUDGET"

SEARCH_STRATEGIES = ("roots", "enumerate")

DEFAULT_CONFIG: Dict[str, Dict[str, Any]] = {
    "budgets": {
        "search_candidates": 10_000_000,
        "point_count_field_size": 1_000_000,
        "lemma_spot_check": 20_000,
    },
    "search": {
        "threads": 1,
        "strategy": "roots",
        "sieve": True,
        "chunk_size": 50_000,
    },
    "output": {
        "json_indent": 2,
        "timing": True,
    },
}


class CatalanConfig:
    """
    Configuration handler for catalanff.

    Unknown keys are kept as-is; missing keys fall back to DEFAULT_CONFIG.
    """

    def __init__(self, config_path: Optional[str] = None, config_dict: Optional[Dict] = None):
        """
        Initialize configuration from file or dictionary.

        Args:
            config_path: Path to YAML or JSON configuration file
            config_dict: Dictionary with configuration

        Raises:
            ConfigurationError: If file format is not supported or file doesn't exist
        """
        self.config = copy.deepcopy(DEFAULT_CONFIG)
        self.config_path = None
        if config_path:
            self._merge(self._load_config_file(config_path))
            self.config_path = config_path
        elif config_dict:
            self._merge(config_dict)

    @classmethod
    def from_env(cls, config_path: Optional[str] = None) -> "CatalanConfig":
        """
        Build a configuration and apply the budget environment overrides.

        Args:
            config_path: Optional configuration file loaded before the overrides

        Returns:
            CatalanConfig instance

        Raises:
            ConfigurationError: If an override is not a positive integer
        """
        config = cls(config_path=config_path)
        for env_name, key in ((BUDGET_ENV, "search_candidates"),
                              (POINT_BUDGET_ENV, "point_count_field_size")):
            raw = os.environ.get(env_name)
            if raw is None:
                continue
            try:
                value = int(raw.replace("_", ""))
            except ValueError:
                raise ConfigurationError(f"{env_name} must be an integer, got {raw!r}")
            if value <= 0:
                raise ConfigurationError(f"{env_name} must be positive, got {value}")
            logger.info("Budget override from %s: %s = %d", env_name, key, value)
            config.config["budgets"][key] = value
        return config

    def _merge(self, data: Optional[Dict]) -> None:
        if not data:
            return
        if not isinstance(data, dict):
            raise ConfigurationError("Configuration root must be a mapping")
        for section, values in data.items():
            if isinstance(values, dict) and isinstance(self.config.get(section), dict):
                self.config[section].update(values)
            else:
                self.config[section] = values

    def _load_config_file(self, config_path: str) -> Dict:
        """
        Load configuration from file.

        Args:
            config_path: Path to configuration file (YAML or JSON)

        Returns:
            Configuration dictionary

        Raises:
            ConfigurationError: If file format is not supported or file doesn't exist
        """
        path = Path(config_path)
        if not path.exists():
            raise ConfigurationError(f"Configuration file not found: {config_path}")

        suffix = path.suffix.lower()
        with open(path, 'r') as f:
            if suffix == '.yaml' or suffix == '.yml':
                return yaml.safe_load(f) or {}
            elif suffix == '.json':
                return json.load(f)
            else:
                raise ConfigurationError(f"Unsupported configuration format: {suffix}")

    def get_budgets_config(self) -> Dict:
        """Get budgets configuration section."""
        return self.config.get('budgets', {})

    def get_search_config(self) -> Dict:
        """Get search configuration section."""
        return self.config.get('search', {})

    def get_output_config(self) -> Dict:
        """Get output configuration section."""
        return self.config.get('output', {})

    @property
    def search_budget(self) -> int:
        return int(self.get_budgets_config()["search_candidates"])

    @property
    def point_count_budget(self) -> int:
        return int(self.get_budgets_config()["point_count_field_size"])

    @property
    def spot_check_budget(self) -> int:
        return int(self.get_budgets_config()["lemma_spot_check"])

    @property
    def threads(self) -> int:
        return int(self.get_search_config()["threads"])

    @property
    def strategy(self) -> str:
        return str(self.get_search_config()["strategy"])

    @property
    def sieve(self) -> bool:
        return bool(self.get_search_config()["sieve"])

    @property
    def chunk_size(self) -> int:
        return int(self.get_search_config()["chunk_size"])

    @property
    def json_indent(self) -> Optional[int]:
        return self.get_output_config().get("json_indent")

    @property
    def timing(self) -> bool:
        return bool(self.get_output_config().get("timing", True))

    def save(self, filepath: Optional[str] = None) -> None:
        """
        Save configuration to file.

        Args:
            filepath: Path to save the configuration
                     If None, uses the original config_path

        Raises:
            ConfigurationError: If no filepath specified and no original path exists
        """
        path = filepath or self.config_path

        if not path:
            raise ConfigurationError("No filepath specified and no original config_path exists")

        path = Path(path)
        suffix = path.suffix.lower()

        os.makedirs(path.parent, exist_ok=True)

        with open(path, 'w') as f:
            if suffix == '.yaml' or suffix == '.yml':
                yaml.dump(self.config, f, default_flow_style=False)
            elif suffix == '.json':
                json.dump(self.config, f, indent=2)
            else:
                raise ConfigurationError(f"Unsupported configuration format: {suffix}")

    def validate(self) -> Tuple[bool, List[str]]:
        """
        Validate the configuration.

        Returns:
            Tuple of (is_valid, list_of_error_messages)
        """
        errors = []

        for section in ("budgets", "search", "output"):
            if not isinstance(self.config.get(section), dict):
                errors.append(f"Section '{section}' must be a mapping")
        if errors:
            return False, errors

        for key in ("search_candidates", "point_count_field_size", "lemma_spot_check"):
            value = self.config["budgets"].get(key)
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                errors.append(f"budgets.{key} must be a positive integer")

        search = self.config["search"]
        for key in ("threads", "chunk_size"):
            value = search.get(key)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                errors.append(f"search.{key} must be an integer >= 1")
        if search.get("strategy") not in SEARCH_STRATEGIES:
            errors.append(f"search.strategy must be one of {list(SEARCH_STRATEGIES)}")
        if not isinstance(search.get("sieve"), bool):
            errors.append("search.sieve must be a boolean")

        indent = self.config["output"].get("json_indent")
        if indent is not None and (not isinstance(indent, int) or indent < 0):
            errors.append("output.json_indent must be null or a non-negative integer")

        return len(errors) == 0, errors

    def require_valid(self) -> "CatalanConfig":
        """
        Raise unless the configuration validates.

        Raises:
            ConfigurationError: With every validation message joined
        """
        is_valid, errors = self.validate()
        if not is_valid:
            raise ConfigurationError("; ".join(errors))
        return self
