"""
Reports package initialization.
"""

from .tables import (
    XiSmallRow, ThetaUpperRow, ThetaLowerRow, T6Row, xi_small_table, theta_upper_small_table,
    theta_lower_table, t6_table, TABLE_NAMES, build_table,
)

__all__ = [
    'XiSmallRow',
    'ThetaUpperRow',
    'ThetaLowerRow',
    'T6Row',
    'xi_small_table',
    'theta_upper_small_table',
    'theta_lower_table',
    't6_table',
    'TABLE_NAMES',
    'build_table',
]
