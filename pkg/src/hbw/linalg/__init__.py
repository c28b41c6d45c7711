"""
hbw Exact Linear Algebra

Dense matrices over Q or F_p with column echelon reduction.
"""

from .dense import DenseMatrix, EchelonForm, QuotientBasis, column_echelon, quotient_basis, rank, same_span

__all__ = [
    'DenseMatrix',
    'EchelonForm',
    'QuotientBasis',
    'column_echelon',
    'rank',
    'quotient_basis',
    'same_span',
]
