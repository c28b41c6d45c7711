"""
hbw Cohomology

HBW^1 of a free category by the partition route and by the oracle.
"""

from .oracle import EquivalenceReport, check_equivalence, oracle_h1, oracle_ider_matrix
from .theorem import CochainBlock, CochainSpace, H1Result, build_generators, h1

__all__ = [
    'CochainBlock',
    'CochainSpace',
    'H1Result',
    'build_generators',
    'h1',
    'oracle_ider_matrix',
    'oracle_h1',
    'EquivalenceReport',
    'check_equivalence',
]
