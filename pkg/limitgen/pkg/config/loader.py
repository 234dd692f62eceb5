"""
Configuration loader.

Harness settings come from defaults plus command-line overrides; chain
files are the only configuration files read from disk.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

from limitgen.config import HarnessConfig
from limitgen.pkg.universe import ExplicitCollection, read_collection

logger = logging.getLogger(__name__)


def load_config(overrides: Optional[Dict[str, Any]] = None) -> HarnessConfig:
    """
    Build the harness configuration.

    Priority:
    1. CLI arguments (highest)
    2. Defaults (lowest)
    """
    config = HarnessConfig()
    if overrides:
        config = config.updated(**overrides)
    return config


@dataclass(frozen=True)
class ChainFile:
    """A chain file: named, ordered collection levels at one noise level."""

    name: str
    noise: int
    levels: List[ExplicitCollection]
    path: Optional[Path] = None


def load_chain(path: Union[str, Path]) -> ChainFile:
    """
    Load a YAML chain file::

        chain: d
        noise: 1
        levels:
          - d0.col
          - d1.col

    Level paths are resolved relative to the chain file.
    """
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"{path}: chain file must be a mapping")

    name = data.get("chain")
    noise = data.get("noise")
    levels = data.get("levels")
    if not isinstance(name, str) or not name:
        raise ValueError(f"{path}: 'chain' must be a nonempty string")
    if not isinstance(noise, int) or isinstance(noise, bool) or noise < 0:
        raise ValueError(f"{path}: 'noise' must be a nonnegative integer")
    if not isinstance(levels, list) or not levels:
        raise ValueError(f"{path}: 'levels' must be a nonempty list of collection files")

    collections: List[ExplicitCollection] = []
    for entry in levels:
        level_path = path.parent / str(entry)
        collection = read_collection(level_path)
        if not isinstance(collection, ExplicitCollection):
            raise ValueError(f"{level_path}: chain levels must be explicit collections")
        collections.append(collection)
    logger.debug(f"Loaded chain {name!r} with {len(collections)} levels from {path}")
    return ChainFile(name, noise, collections, path)
