"""
hbw Path Algebra

Elements of kQ, the quiver partition (Algorithm A), the matrices V and W
(Algorithm B) and quiver representations.
"""

from .matrices import (
    MatrixPair,
    algorithm_b,
    check_matrix_pair,
    check_recursion,
    recursive_columns,
)
from .partition import (
    Partition,
    PartitionError,
    algorithm_a,
    partition_from_lists,
    validate_partition,
)
from .path_algebra import PathAlgebraElement, pa_linear, pa_mul
from .representation import (
    HomogeneityError,
    QuiverRep,
    enumerate_paths,
    eval_element,
    eval_path,
    regular_rep,
    rep_validate,
)

__all__ = [
    'PathAlgebraElement',
    'pa_linear',
    'pa_mul',
    'Partition',
    'PartitionError',
    'algorithm_a',
    'validate_partition',
    'partition_from_lists',
    'MatrixPair',
    'algorithm_b',
    'recursive_columns',
    'check_recursion',
    'check_matrix_pair',
    'QuiverRep',
    'HomogeneityError',
    'rep_validate',
    'eval_path',
    'eval_element',
    'enumerate_paths',
    'regular_rep',
]
