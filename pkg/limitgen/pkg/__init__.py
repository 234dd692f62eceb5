"""
limitgen - public packages

Reusable packages that can be imported by external code.
"""
