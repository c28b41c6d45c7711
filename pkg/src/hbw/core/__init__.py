"""
hbw Core Types

Quivers, paths, arrow-set operations, scalar fields and validation reports.
"""

from .field import RATIONALS, Field, PrimeField, RationalField, parse_field
from .quiver import (
    Arrow,
    ArrowSet,
    CyclicQuiverError,
    Path,
    Q1ContractError,
    Quiver,
    QuiverError,
    compose,
    gset,
    hset,
    is_acyclic,
    is_cycle,
    max_acyclic_extension,
    q1_path,
    reachable,
)
from .report import ValidationReport

__all__ = [
    'Arrow',
    'ArrowSet',
    'Path',
    'Quiver',
    'QuiverError',
    'CyclicQuiverError',
    'Q1ContractError',
    'compose',
    'is_cycle',
    'is_acyclic',
    'reachable',
    'q1_path',
    'max_acyclic_extension',
    'hset',
    'gset',
    'Field',
    'RationalField',
    'PrimeField',
    'RATIONALS',
    'parse_field',
    'ValidationReport',
]
