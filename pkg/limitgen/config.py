"""Harness configuration."""

from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Optional


@dataclass
class HarnessConfig:
    """Tunable defaults shared by every command."""

    # Dimension search
    max_size: int = 12
    pool_depth: Optional[int] = None  # None: noise level + 2

    # Oracle windows (ids 0..window)
    closure_window: int = 500
    oracle_window: int = 60

    # Refutation
    horizon: int = 6
    algorithm1_iterations: int = 5
    inside_threshold: Optional[int] = None
    concentration_threshold: Optional[int] = None
    scattered_threshold: Optional[int] = None

    # Games
    random_spread: int = 20
    default_steps: int = 20

    # External generators
    external_timeout: float = 5.0

    # Random instances for property suites
    max_languages: int = 4
    max_blocks: int = 3
    max_exceptions: int = 6
    max_column: int = 6

    def pool_depth_for(self, noise: int) -> int:
        return self.pool_depth if self.pool_depth is not None else noise + 2

    def updated(self, **overrides: Any) -> "HarnessConfig":
        """Copy with the non-None overrides applied."""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"unknown configuration keys: {', '.join(sorted(unknown))}")
        values = asdict(self)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return HarnessConfig(**values)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)
