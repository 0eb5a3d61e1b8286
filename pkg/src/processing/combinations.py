"""
Batched enumeration of (0,1)-matrices with distinct nonzero rows.

Candidates are the n-element combinations of the nonzero vertices of Q_n,
taken as integer masks in lexicographic order (bit i is coordinate x_{i+1}).
A (0,1)-matrix with a zero or repeated row is singular and row order does not
change |det|, so these cover every nonsingular class.

Each batch is inverted in binary64, rounded to an integer adjugate and
certified exactly (M adj = det I in int64) before anything downstream sees it.
"""

import itertools
import logging
import math
import threading
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import numpy as np

from ..config import get_config
from ..numerics import RationalMatrix, det as exact_det, inverse as exact_inverse
from .sweep import partition, run_partitioned

logger = logging.getLogger(__name__)


@dataclass
class CandidateBatch:
    """Nondegenerate candidates of one batch with certified integer inverses."""
    # (B, n) row masks, each row strictly increasing
    combos: np.ndarray
    # (B, n, n) 0/1 matrices
    rows: np.ndarray
    # (B,) signed determinants
    det: np.ndarray
    # (B, n, n) adjugates: rows @ adj == det * I
    adj: np.ndarray
    # candidates examined for this batch, singular ones included
    examined: int


class ProgressCounter:
    """Thread-safe candidate counter that logs every ``interval`` candidates."""

    def __init__(self, total: int, interval: int, label: str):
        self.total = total
        self.interval = max(1, interval)
        self.label = label
        self.processed = 0
        self._next_report = self.interval
        self._lock = threading.Lock()

    def add(self, count: int) -> None:
        with self._lock:
            self.processed += count
            if self.processed >= self._next_report:
                logger.info(f"{self.label}: processed {self.processed:,}/{self.total:,} candidates")
                while self._next_report <= self.processed:
                    self._next_report += self.interval


def candidate_count(n: int) -> int:
    """C(2^n - 1, n)."""
    return math.comb(2 ** n - 1, n)


def mask_rows(masks: np.ndarray, n: int) -> np.ndarray:
    """Expand integer masks (any shape) to a trailing axis of n bits."""
    return (np.asarray(masks, dtype=np.int64)[..., None] >> np.arange(n)) & 1


def _exact_adjugate(matrix: np.ndarray):
    M = RationalMatrix(matrix.tolist())
    d = exact_det(M)
    inv = exact_inverse(M)
    return int(d), np.array([[int(x * d) for x in row] for row in inv.to_lists()], dtype=np.int64)


def certify_batch(combos: np.ndarray, n: int, examined: int) -> CandidateBatch:
    """Drop singular candidates and attach certified determinants and adjugates."""
    rows = mask_rows(combos, n)
    dets = np.rint(np.linalg.det(rows.astype(float))).astype(np.int64)
    keep = dets != 0
    combos, rows, dets = combos[keep], rows[keep], dets[keep]
    if not len(dets):
        empty = np.zeros((0, n, n), dtype=np.int64)
        return CandidateBatch(combos, empty, dets, empty, examined)

    inverses = np.linalg.inv(rows.astype(float))
    adj = np.rint(inverses * dets[:, None, None]).astype(np.int64)
    product = np.einsum('bij,bjk->bik', rows, adj)
    certified = (product == dets[:, None, None] * np.eye(n, dtype=np.int64)).all(axis=(1, 2))
    for k in np.nonzero(~certified)[0]:
        logger.warning(f"Float inverse failed certification for rows {combos[k].tolist()}; using exact inverse")
        dets[k], adj[k] = _exact_adjugate(rows[k])
    return CandidateBatch(combos, rows, dets, adj, examined)


def iter_batches(n: int, first_start: int, first_stop: int, batch_size: int,
                 progress: Optional[ProgressCounter] = None) -> Iterator[CandidateBatch]:
    """Certified batches for combinations whose least mask lies in [first_start, first_stop)."""
    top = 2 ** n
    for first in range(first_start, first_stop):
        rest = itertools.combinations(range(first + 1, top), n - 1)
        while True:
            chunk = list(itertools.islice(rest, batch_size))
            if not chunk:
                break
            combos = np.array([(first,) + c for c in chunk], dtype=np.int64).reshape(len(chunk), n)
            yield certify_batch(combos, n, len(chunk))
            if progress is not None:
                progress.add(len(chunk))


def search_combinations(n: int, reducer_factory: Callable, workers: Optional[int] = None,
                        batch_size: Optional[int] = None, label: str = "search"):
    """
    Feed every certified candidate of order n to reducers and merge them.

    Chunks are contiguous ranges of the least row mask; results merge in chunk
    order, so the first minimiser found is the lexicographically least one.

    Args:
        n: Matrix order
        reducer_factory: Zero-argument callable returning an object with
            ``consume(batch)`` and ``merge(other)``
        workers: Thread count (configuration default when None)
        batch_size: Candidates per float batch (configuration default when None)
        label: Progress log prefix

    Returns:
        The merged reducer
    """
    settings = get_config().compute
    workers = settings.max_workers if workers is None else max(1, workers)
    batch_size = settings.batch_size if batch_size is None else batch_size
    total = candidate_count(n)
    progress = ProgressCounter(total, settings.progress_interval, label)

    # first masks 1 .. 2^n - n can start a combination
    firsts = 2 ** n - n
    chunks = [(start + 1, stop + 1) for start, stop in partition(firsts, workers)]
    logger.info(f"{label}: n={n}, {total:,} candidates, {len(chunks)} chunks, {workers} workers")

    def task(start: int, stop: int):
        reducer = reducer_factory()
        for batch in iter_batches(n, start, stop, batch_size, progress):
            reducer.consume(batch)
        return reducer

    merged = reducer_factory()
    for result in run_partitioned(chunks, task, workers):
        merged.merge(result)
    return merged


__all__ = [
    'CandidateBatch',
    'ProgressCounter',
    'candidate_count',
    'mask_rows',
    'certify_batch',
    'iter_batches',
    'search_combinations',
]
