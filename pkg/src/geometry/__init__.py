"""
Geometry package initialization.

Simplex construction and its characteristics relative to the cube and the ball.
"""

from .simplex import Point, Simplex, SimplexMetrics, build_simplex, unit_simplex, lagrange_eval, metrics
from .cube import (
    AbsorptionReport, CubeNormReport, BilateralReport, CubeInscriptionReport, QuasiRigidityReport,
    AlphaValues, mask_to_vertex, vertex_to_mask, axial_diameters, alpha_cube, face_maxima, xi_cube,
    scaled_forms, projector_norm_cube, projector_norm_cube_naive, check_bilateral,
    theorem61_diagnostics, quasi_rigidity_probe, replaced_volume,
)
from .ball import (
    Ball, BallNormReport, BallReport, PsiReport, alpha_ball, alpha_ball_formulas, incenter_inradius,
    xi_ball, minimum_enclosing_ball, circumradius, projector_norm_ball, regular_simplex, psi,
    psi_norm, d_n_series, ball_report,
)

__all__ = [
    'Point', 'Simplex', 'SimplexMetrics', 'build_simplex', 'unit_simplex', 'lagrange_eval', 'metrics',
    'AbsorptionReport', 'CubeNormReport', 'BilateralReport', 'CubeInscriptionReport',
    'QuasiRigidityReport', 'AlphaValues', 'mask_to_vertex', 'vertex_to_mask', 'axial_diameters',
    'alpha_cube', 'face_maxima', 'xi_cube', 'scaled_forms', 'projector_norm_cube',
    'projector_norm_cube_naive', 'check_bilateral', 'theorem61_diagnostics', 'quasi_rigidity_probe',
    'replaced_volume',
    'Ball', 'BallNormReport', 'BallReport', 'PsiReport', 'alpha_ball', 'alpha_ball_formulas',
    'incenter_inradius', 'xi_ball', 'minimum_enclosing_ball', 'circumradius', 'projector_norm_ball',
    'regular_simplex', 'psi', 'psi_norm', 'd_n_series', 'ball_report',
]
