"""
Families package initialization.
"""

from .catalog import TAU, s_star, catalog, catalog_names, family_v, resolve
from .volumes import (
    CutVolumes, PerfectReport, CutVolumePair, halfspace_cube_volume, cut_volumes, is_equisecting,
    is_perfect, v_closed_form,
)
from .search import Objective, SearchResult, search_01

__all__ = [
    'TAU',
    's_star',
    'catalog',
    'catalog_names',
    'family_v',
    'resolve',
    'CutVolumes',
    'PerfectReport',
    'CutVolumePair',
    'halfspace_cube_volume',
    'cut_volumes',
    'is_equisecting',
    'is_perfect',
    'v_closed_form',
    'Objective',
    'SearchResult',
    'search_01',
]
