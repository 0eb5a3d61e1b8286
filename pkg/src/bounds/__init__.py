"""
Bounds package initialization.
"""

from .legendre import (
    BoundsRow, legendre_eval, legendre_inv, slice_measure, theta_lower_cube, ball_volume,
    regular_simplex_volume, theta_lower_ball, theta_lower_simplex_ball, chi_inv_lower_closed_form,
    theta_lower_constant,
)
from .fixtures import MaxDeterminant, MAX_DETERMINANTS, PRINTED_LEGENDRE_BOUNDS, max_determinant

__all__ = [
    'BoundsRow',
    'legendre_eval',
    'legendre_inv',
    'slice_measure',
    'theta_lower_cube',
    'ball_volume',
    'regular_simplex_volume',
    'theta_lower_ball',
    'theta_lower_simplex_ball',
    'chi_inv_lower_closed_form',
    'theta_lower_constant',
    'MaxDeterminant',
    'MAX_DETERMINANTS',
    'PRINTED_LEGENDRE_BOUNDS',
    'max_determinant',
]
