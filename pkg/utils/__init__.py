"""
Report serialization helpers for evchar.
"""
