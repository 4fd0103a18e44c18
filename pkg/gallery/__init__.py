"""
Classical frieze families, their closed-form determinants and seeded random inputs.
"""

from .constructors import baur_marsh_frieze, cc_frieze, constant_frieze, dissection_frieze, edge_variable
from .formulas import bci_det_formula, bhj_det_formula, bm_det_formula, dangulation_det_formula
from .maldonado import (
    MaldonadoMatrix,
    maldonado_check,
    maldonado_det_formula,
    maldonado_matrix,
    overlap_identity_check,
)
from .random_gen import (
    draw_weak_frieze,
    random_assignment,
    random_dissection,
    random_rational,
    random_weak_frieze,
)

__all__ = [
    'baur_marsh_frieze',
    'cc_frieze',
    'constant_frieze',
    'dissection_frieze',
    'edge_variable',
    'bci_det_formula',
    'bhj_det_formula',
    'bm_det_formula',
    'dangulation_det_formula',
    'MaldonadoMatrix',
    'maldonado_check',
    'maldonado_det_formula',
    'maldonado_matrix',
    'overlap_identity_check',
    'draw_weak_frieze',
    'random_assignment',
    'random_dissection',
    'random_rational',
    'random_weak_frieze',
]
