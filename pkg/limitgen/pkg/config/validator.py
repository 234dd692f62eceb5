"""
Configuration validator.
"""

from typing import List

from limitgen.config import HarnessConfig


def validate_config(config: HarnessConfig) -> List[str]:
    """
    Validate harness configuration.

    Returns:
        List of error messages (empty if valid)
    """
    errors = []

    if config.max_size < 0:
        errors.append("max_size must be >= 0")

    if config.pool_depth is not None and config.pool_depth < 1:
        errors.append("pool_depth must be >= 1")

    if config.closure_window < 0:
        errors.append("closure_window must be >= 0")

    if config.oracle_window < 0:
        errors.append("oracle_window must be >= 0")

    if config.horizon < 1:
        errors.append("horizon must be >= 1")

    if config.algorithm1_iterations < 0:
        errors.append("algorithm1_iterations must be >= 0")

    for name in ("inside_threshold", "concentration_threshold", "scattered_threshold"):
        value = getattr(config, name)
        if value is not None and value < 1:
            errors.append(f"{name} must be >= 1")

    if config.random_spread < 0:
        errors.append("random_spread must be >= 0")

    if config.default_steps < 1:
        errors.append("default_steps must be >= 1")

    if config.external_timeout <= 0:
        errors.append("external_timeout must be > 0 seconds")

    # Instance bounds
    if config.max_languages < 1:
        errors.append("max_languages must be >= 1")

    if config.max_blocks < 1:
        errors.append("max_blocks must be >= 1")

    if config.max_exceptions < 0:
        errors.append("max_exceptions must be >= 0")

    if config.max_column < config.max_blocks:
        errors.append("max_column cannot be smaller than max_blocks")

    return errors
