"""
Processing package initialization.
"""

from .sweep import SweepPlan, NormReducer, FaceIncidenceReducer, build_plan, partition, run_partitioned, sweep_cube
from .combinations import (
    CandidateBatch, ProgressCounter, candidate_count, mask_rows, certify_batch, iter_batches,
    search_combinations,
)

__all__ = [
    'SweepPlan',
    'NormReducer',
    'FaceIncidenceReducer',
    'build_plan',
    'partition',
    'run_partitioned',
    'sweep_cube',
    'CandidateBatch',
    'ProgressCounter',
    'candidate_count',
    'mask_rows',
    'certify_batch',
    'iter_batches',
    'search_combinations',
]
