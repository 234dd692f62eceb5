"""
limitgen subcommands package.
"""

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
