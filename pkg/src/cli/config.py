"""
Configuration management for the orbit audit command line.
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

try:
    from .. import __version__
except ImportError:
    from src import __version__

ENV_PREFIX = "ORBIT_AUDIT_"
OUTPUT_DIR_ENV = f"{ENV_PREFIX}OUTPUT_DIR"


@dataclass
class AppConfig:
    """Application defaults shared by every subcommand."""

    # Tool identification
    tool_version: str = __version__

    # Logging configuration
    log_level: str = "INFO"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    # Output configuration
    output_dir: Optional[Path] = None

    # Reference orbit configuration
    reference_digits: int = 1000
    export_digits: int = 30
    reference_backend: str = "decimal"

    def __post_init__(self):
        """Post-initialization setup."""
        if self.output_dir is None:
            self.output_dir = Path("orbit-audit-output")


class ConfigManager:
    """Loads application defaults from the environment and an optional .env file."""

    def __init__(self, dotenv_path: Optional[Path] = None):
        """Initialize configuration manager."""
        self._config: Optional[AppConfig] = None
        self._dotenv_path = dotenv_path

    def get_config(self) -> AppConfig:
        """Get application configuration, loading from environment if needed."""
        if self._config is None:
            self._config = self._load_config()
        return self._config

    def reload(self) -> AppConfig:
        """Drop the cached configuration and read the environment again."""
        self._config = None
        return self.get_config()

    def _load_config(self) -> AppConfig:
        """Load configuration from environment variables."""
        load_dotenv(self._dotenv_path, override=False)
        config = AppConfig()

        config.log_level = os.getenv(f"{ENV_PREFIX}LOG_LEVEL", config.log_level).upper()

        output_dir_env = os.getenv(OUTPUT_DIR_ENV)
        if output_dir_env:
            config.output_dir = Path(output_dir_env)

        digits_env = os.getenv(f"{ENV_PREFIX}DIGITS")
        if digits_env:
            config.reference_digits = int(digits_env)

        export_digits_env = os.getenv(f"{ENV_PREFIX}EXPORT_DIGITS")
        if export_digits_env:
            config.export_digits = int(export_digits_env)

        config.reference_backend = os.getenv(f"{ENV_PREFIX}BACKEND", config.reference_backend).lower()

        return config

    def run_defaults(self) -> Dict[str, Any]:
        """Defaults for RunConfig fields that the environment may change."""
        config = self.get_config()

        return {
            "output_dir": config.output_dir,
            "digits": config.reference_digits,
            "export_digits": config.export_digits,
            "backend": config.reference_backend,
        }


# Global configuration manager instance
config_manager = ConfigManager()


def get_config() -> AppConfig:
    """Get the current application configuration."""
    return config_manager.get_config()
