"""
Test suite for evchar.
"""

__version__ = "0.1.0"
