"""Desen aileleri, occurrence sayimi ve φ homomorfizmalari."""

from .families import (
    Canonical, BitPattern, FinitePattern, PatternFamily, build_M_kappa, build_M_g,
)
from .occurrences import (
    Occurrence, OccReport, occurrences, class_count, count_segments, phi_eval, mirror_segments,
)
from .homomorphisms import (
    star_check, almost_disjoint, SpeckerHom, phi_alpha, matrix_columns, hom_matrix,
    phi_additivity, phi_inverse_law, WitnessReport, specker_witness,
)

__all__ = [
    'Canonical', 'BitPattern', 'FinitePattern', 'PatternFamily', 'build_M_kappa', 'build_M_g',
    'Occurrence', 'OccReport', 'occurrences', 'class_count', 'count_segments', 'phi_eval',
    'mirror_segments',
    'star_check', 'almost_disjoint', 'SpeckerHom', 'phi_alpha', 'matrix_columns', 'hom_matrix',
    'phi_additivity', 'phi_inverse_law', 'WitnessReport', 'specker_witness',
]
