"""
Utilities package initialization.
"""

from .gray_code import GrayStep, to_gray_code, from_gray_code, gray_code_iter

__all__ = [
    'GrayStep',
    'to_gray_code',
    'from_gray_code',
    'gray_code_iter',
]
