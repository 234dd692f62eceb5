"""
Configuration management package.
"""

from limitgen.config import HarnessConfig

from .loader import ChainFile, load_chain, load_config
from .validator import validate_config

__all__ = ["ChainFile", "load_chain", "load_config", "HarnessConfig", "validate_config"]
