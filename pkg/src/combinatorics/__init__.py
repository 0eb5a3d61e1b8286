"""
Combinatorics package initialization.
"""

from .hadamard import HadamardMatrix, hadamard, hadamard_simplex, is_supported_order
from .maxdet import (
    Verdict, MaxdetDiagnostic, HSearchResult, DetRelations, maxdet_diagnostic, h_search,
    det_relations, hadamard_h,
)

__all__ = [
    'HadamardMatrix',
    'hadamard',
    'hadamard_simplex',
    'is_supported_order',
    'Verdict',
    'MaxdetDiagnostic',
    'HSearchResult',
    'DetRelations',
    'maxdet_diagnostic',
    'h_search',
    'det_relations',
    'hadamard_h',
]
