"""
Exact algebra for evchar: partitions, characters, symmetric functions,
lattice paths and constant terms.
"""

from .char_cache import CharacterCache
from .characters import CharacterEngine, chi, chi_column_sum
from .errors import (
    CacheFormatError, DomainError, EvcharError, GuardError, PartitionError, SizeMismatchError,
)
from .ev_sets import WeightedPartitions, ev, r_even_cols, r_even_rows
from .partitions import Partition, parse_partition, partitions_of
from .sym_functions import SymFuncM

__all__ = [
    'CharacterCache',
    'CharacterEngine',
    'chi',
    'chi_column_sum',
    'CacheFormatError',
    'DomainError',
    'EvcharError',
    'GuardError',
    'PartitionError',
    'SizeMismatchError',
    'WeightedPartitions',
    'ev',
    'r_even_cols',
    'r_even_rows',
    'Partition',
    'parse_partition',
    'partitions_of',
    'SymFuncM',
]
