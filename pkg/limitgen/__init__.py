"""
limitgen

A simulator and checker for language generation in the limit with bounded
noise:
- Symbolic infinite languages over N x N
- Noisy closures and closure dimension
- Closure and chain generators
- Noisy enumerations and the column-family refutation adversary
- Game traces and property suites
"""

from limitgen.pkg.version import __version__

__author__ = "limitgen developers"
