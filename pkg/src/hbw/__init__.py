"""
hbw: First Baues-Wirsching Cohomology of Free Categories

Computes HBW^1(C, pi(N) o t) for the category C freely generated by a
finite quiver and a finite-dimensional module N, by partitioning the
quiver (Algorithm A), building the matrices V and W over the path algebra
(Algorithm B) and taking the quotient of the cochain space by their
evaluated span. A brute-force inner-derivation oracle cross-checks it.

Example Usage:
    from hbw import RATIONALS, h1, regular_rep
    from hbw.cli import gen_example

    quiver = gen_example("star", 3)
    result = h1(quiver, regular_rep(quiver, RATIONALS))
    print(result.dim)  # 5
"""

__version__ = "0.1.0"

from .algebra.matrices import MatrixPair, algorithm_b
from .algebra.partition import Partition, PartitionError, algorithm_a, validate_partition
from .algebra.path_algebra import PathAlgebraElement
from .algebra.representation import HomogeneityError, QuiverRep, regular_rep, rep_validate
from .cohomology.oracle import check_equivalence, oracle_h1
from .cohomology.theorem import H1Result, h1
from .core.field import RATIONALS, PrimeField, parse_field
from .core.quiver import CyclicQuiverError, Path, Q1ContractError, Quiver, QuiverError
from .linalg.dense import DenseMatrix

__all__ = [
    # Quivers
    'Quiver',
    'Path',
    'QuiverError',
    'CyclicQuiverError',
    'Q1ContractError',
    # Fields and matrices
    'RATIONALS',
    'PrimeField',
    'parse_field',
    'DenseMatrix',
    # Algorithms
    'PathAlgebraElement',
    'Partition',
    'PartitionError',
    'algorithm_a',
    'validate_partition',
    'MatrixPair',
    'algorithm_b',
    # Representations
    'QuiverRep',
    'HomogeneityError',
    'regular_rep',
    'rep_validate',
    # Cohomology
    'H1Result',
    'h1',
    'oracle_h1',
    'check_equivalence',
]
