"""
Helpers shared by subcommands.
"""

from typing import Any

from limitgen.config import HarnessConfig
from limitgen.pkg.config import load_config, validate_config


def build_config(**overrides: Any) -> HarnessConfig:
    """Defaults plus flag overrides; invalid settings raise ValueError."""
    config = load_config(overrides)
    errors = validate_config(config)
    if errors:
        raise ValueError("invalid configuration: " + "; ".join(errors))
    return config
