"""
Version information.
"""

__version__ = "0.3.0"


def get_version() -> str:
    """Get version string."""
    return __version__
