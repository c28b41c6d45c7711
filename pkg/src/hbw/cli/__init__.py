"""
hbw Command Line Front End

JSON documents, example families, the fuzzer and the argparse entry point.
"""

from .documents import (
    DocumentError,
    dump_json,
    load_json,
    matrix_pair_from_doc,
    matrix_pair_to_doc,
    partition_from_doc,
    partition_to_doc,
    quiver_from_doc,
    quiver_to_doc,
    rep_from_doc,
    rep_to_doc,
)
from .examples import FAMILIES, gen_example
from .fuzz import FuzzConfig, FuzzReport, random_quiver, random_rep, run_fuzz

__all__ = [
    'DocumentError',
    'load_json',
    'dump_json',
    'quiver_from_doc',
    'quiver_to_doc',
    'rep_from_doc',
    'rep_to_doc',
    'partition_from_doc',
    'partition_to_doc',
    'matrix_pair_from_doc',
    'matrix_pair_to_doc',
    'FAMILIES',
    'gen_example',
    'FuzzConfig',
    'FuzzReport',
    'random_quiver',
    'random_rep',
    'run_fuzz',
]
