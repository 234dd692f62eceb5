"""
limitgen - Command Line Interface
"""
