"""
limitgen - internal packages

Implementation details of the command-line harness, not meant for external
use.
"""
