"""
Parallel sweep over the vertices of the unit cube Q_n.

The n+1 affine forms lambda_j are scaled to integers. The low ``block_bits``
coordinates are tabulated once: a (2^b x m) table of their contributions. The
remaining high coordinates are walked in Gray code order, so each block base
is updated by one row addition or subtraction. Blocks are partitioned into
contiguous Gray index chunks that run on a thread pool, and the chunk results
are merged with an associative reducer. The merged result does not depend on
the partition.

Vertex masks use bit i for coordinate x_{i+1}.
"""

import logging
import concurrent.futures
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_config
from ..exceptions import DimensionTooLarge
from ..utils.gray_code import gray_code_iter

logger = logging.getLogger(__name__)

_INT64_SAFE = 2 ** 62


@dataclass
class SweepPlan:
    """Integer affine forms to evaluate on every cube vertex."""
    # coefficients[i][j]: coefficient of x_{i+1} in form j
    coefficients: List[List[int]]
    constants: List[int]
    n: int
    block_bits: int
    workers: int

    @property
    def n_forms(self) -> int:
        return len(self.constants)

    @property
    def high_bits(self) -> int:
        return self.n - self.block_bits

    @property
    def dtype(self):
        """int64 when every partial sum provably fits, Python ints otherwise."""
        bound = sum(
            abs(self.constants[j]) + sum(abs(row[j]) for row in self.coefficients)
            for j in range(self.n_forms)
        )
        return np.int64 if bound < _INT64_SAFE else object


class NormReducer:
    """Maximum of sum_j |form_j| with the least witness mask and least 1-point mask."""

    def __init__(self):
        self.best = None
        self.witness: Optional[int] = None
        self.one_point: Optional[int] = None

    def consume(self, values: np.ndarray, masks: np.ndarray) -> None:
        totals = np.abs(values).sum(axis=1)
        block_best = totals.max()
        if self.best is not None and block_best < self.best:
            return
        hits = np.asarray(totals == block_best, dtype=bool)
        witness = int(masks[hits].min())
        negatives = np.asarray(values < 0, dtype=bool).sum(axis=1)
        single = hits & (negatives == 1)
        one_point = int(masks[single].min()) if single.any() else None
        if self.best is None or block_best > self.best:
            self.best, self.witness, self.one_point = block_best, witness, one_point
        else:
            self.witness = min(self.witness, witness)
            self.one_point = _min_optional(self.one_point, one_point)

    def merge(self, other: "NormReducer") -> None:
        if other.best is None:
            return
        if self.best is None or other.best > self.best:
            self.best, self.witness, self.one_point = other.best, other.witness, other.one_point
        elif other.best == self.best:
            self.witness = min(self.witness, other.witness)
            self.one_point = _min_optional(self.one_point, other.one_point)


class FaceIncidenceReducer:
    """
    Records, per cube vertex, the forms whose negation equals ``target``.

    With target = D * max_j max_Q(-lambda_j) these are the faces of xi(S)S
    through the vertex.
    """

    def __init__(self, target: int):
        self.target = target
        self.incidence: Dict[int, Tuple[int, ...]] = {}
        self.vertices_without_face = 0

    def consume(self, values: np.ndarray, masks: np.ndarray) -> None:
        on_face = np.asarray((-values) == self.target, dtype=bool)
        counts = on_face.sum(axis=1)
        self.vertices_without_face += int((counts == 0).sum())
        for row in np.nonzero(counts)[0]:
            self.incidence[int(masks[row])] = tuple(int(j) for j in np.nonzero(on_face[row])[0])

    def merge(self, other: "FaceIncidenceReducer") -> None:
        self.incidence.update(other.incidence)
        self.vertices_without_face += other.vertices_without_face


def _min_optional(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def build_plan(coefficients: Sequence[Sequence[int]], constants: Sequence[int],
               block_bits: Optional[int] = None, workers: Optional[int] = None,
               dimension_cap: Optional[int] = None) -> SweepPlan:
    """Validate the dimension against the cap and fix the block layout."""
    settings = get_config().compute
    n = len(coefficients)
    cap = settings.dimension_cap if dimension_cap is None else dimension_cap
    if n > cap:
        raise DimensionTooLarge(n, cap, "cube-vertex sweep")
    bits = settings.block_bits if block_bits is None else block_bits
    return SweepPlan(
        coefficients=[list(map(int, row)) for row in coefficients],
        constants=list(map(int, constants)),
        n=n,
        block_bits=max(0, min(bits, n)),
        workers=max(1, settings.max_workers if workers is None else workers),
    )


def _low_table(plan: SweepPlan) -> Tuple[np.ndarray, np.ndarray]:
    b = plan.block_bits
    masks = np.arange(2 ** b, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(b)) & 1).astype(plan.dtype)
    low = np.array(plan.coefficients[:b], dtype=plan.dtype).reshape(b, plan.n_forms)
    return bits @ low if b else np.zeros((1, plan.n_forms), dtype=plan.dtype), masks


def _run_chunk(plan: SweepPlan, table: np.ndarray, low_masks: np.ndarray,
               start: int, stop: int, reducer_factory: Callable):
    reducer = reducer_factory()
    high_rows = np.array(plan.coefficients[plan.block_bits:], dtype=plan.dtype).reshape(
        plan.high_bits, plan.n_forms)
    base = None
    for step in gray_code_iter(plan.high_bits, start, stop):
        if base is None:
            base = np.array(plan.constants, dtype=plan.dtype)
            for bit in range(plan.high_bits):
                if step.code >> bit & 1:
                    base = base + high_rows[bit]
        elif step.switched_on:
            base = base + high_rows[step.flipped_bit]
        else:
            base = base - high_rows[step.flipped_bit]
        masks = low_masks | (step.code << plan.block_bits)
        reducer.consume(table + base, masks)
    return reducer


def partition(total: int, workers: int, per_worker: int = 4) -> List[Tuple[int, int]]:
    """Split range(total) into at most workers*per_worker contiguous chunks."""
    n_chunks = max(1, min(total, workers * per_worker))
    edges = [total * k // n_chunks for k in range(n_chunks + 1)]
    return [(edges[k], edges[k + 1]) for k in range(n_chunks) if edges[k] < edges[k + 1]]


def run_partitioned(chunks: Sequence[Tuple[int, int]], task: Callable, workers: int) -> List:
    """
    Run ``task(start, stop)`` for every chunk, on a thread pool when workers > 1.

    Results are returned in chunk order whatever the completion order.
    """
    results = {}
    if workers == 1 or len(chunks) == 1:
        for k, (start, stop) in enumerate(chunks):
            results[k] = task(start, stop)
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            future_to_chunk = {
                executor.submit(task, start, stop): k
                for k, (start, stop) in enumerate(chunks)
            }
            for future in concurrent.futures.as_completed(future_to_chunk):
                results[future_to_chunk[future]] = future.result()
    return [results[k] for k in sorted(results)]


def sweep_cube(plan: SweepPlan, reducer_factory: Callable):
    """
    Run ``reducer_factory()`` reducers over all 2^n vertices and merge them.

    Args:
        plan: Integer forms and block layout (see build_plan)
        reducer_factory: Zero-argument callable returning a reducer with
            ``consume(values, masks)`` and ``merge(other)``

    Returns:
        The merged reducer
    """
    table, low_masks = _low_table(plan)
    n_blocks = 2 ** plan.high_bits
    chunks = partition(n_blocks, plan.workers)

    logger.debug(f"Cube sweep n={plan.n}: {n_blocks} blocks of {2 ** plan.block_bits} vertices, "
                 f"{len(chunks)} chunks, dtype={getattr(plan.dtype, '__name__', plan.dtype)}")

    def task(start: int, stop: int):
        return _run_chunk(plan, table, low_masks, start, stop, reducer_factory)

    merged = reducer_factory()
    for result in run_partitioned(chunks, task, plan.workers):
        merged.merge(result)
    return merged


__all__ = [
    'SweepPlan',
    'NormReducer',
    'FaceIncidenceReducer',
    'build_plan',
    'partition',
    'run_partitioned',
    'sweep_cube',
]
