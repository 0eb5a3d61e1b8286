"""
Gray code iteration over bit masks.

Consecutive codes differ in exactly one bit, so a sum of per-bit contributions
can be updated with a single addition or subtraction per step.
"""

from dataclasses import dataclass
from typing import Iterator, Optional


def to_gray_code(index: int) -> int:
    """Convert a counter index to its Gray code."""
    return (index >> 1) ^ index


def from_gray_code(code: int) -> int:
    """Inverse of to_gray_code."""
    index = code
    shift = 1
    while code >> shift:
        index ^= code >> shift
        shift += 1
    return index


@dataclass(frozen=True)
class GrayStep:
    """One step of a Gray code walk."""
    index: int
    code: int
    # None on the first step of a walk
    flipped_bit: Optional[int]
    # True when the flipped bit was switched on
    switched_on: bool = False


def gray_code_iter(num_bits: int, start: int = 0, stop: Optional[int] = None) -> Iterator[GrayStep]:
    """
    Walk the Gray codes with indices in [start, stop).

    The first step carries no flipped bit; callers initialise their state from
    ``code`` directly, so any contiguous index range can be walked on its own.
    """
    stop = 2 ** num_bits if stop is None else stop
    if start >= stop:
        return
    code = to_gray_code(start)
    yield GrayStep(index=start, code=code, flipped_bit=None)

    for index in range(start + 1, stop):
        last = code
        code = to_gray_code(index)
        flipped_bit = (code ^ last).bit_length() - 1
        yield GrayStep(index=index, code=code, flipped_bit=flipped_bit,
                       switched_on=bool(code >> flipped_bit & 1))


__all__ = ['to_gray_code', 'from_gray_code', 'GrayStep', 'gray_code_iter']
