"""
Main package initialization for the simplex toolkit.
"""

__version__ = "1.0.0"
__title__ = "Simplex toolkit"
__description__ = "Absorption indices, interpolation projector norms and volume bounds for simplices in the cube and the ball"

# Import main modules for easy access
from . import config
from . import numerics
from . import geometry
from . import bounds
from . import combinatorics
from . import families
from . import processing
from . import reports
from . import utils

__all__ = [
    'config',
    'numerics',
    'geometry',
    'bounds',
    'combinatorics',
    'families',
    'processing',
    'reports',
    'utils'
]
