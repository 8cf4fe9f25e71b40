"""Calabi-Yau completions, their smash products with Hopf algebras, deformations and Ginzburg algebras."""

from .config import validate_config
from .deformation import (
    CocycleVerdict,
    DeformedCompletion,
    deformed_cocycle_check,
    deformed_completion,
    vertex_contraction,
)
from .dualising import DualisingComplex, dualising_from_ext, hereditary_inverse_dualising
from .exceptions import CocycleError, CompletionError, CyclicQuiverError
from .ginzburg import GinzburgAlgebra
from .quiver import Arrow, Quiver, QuiverAction, path_algebra, path_bound
from .sigma_smash import CompletionIso, SigmaStarSmash, completion_smash_iso, sigma_star_smash
from .tensor_algebra import TruncatedTensorAlgebra, completed_path_counts, cy_completion


__all__ = [
    'Arrow',
    'CocycleError',
    'CocycleVerdict',
    'CompletionError',
    'CompletionIso',
    'CyclicQuiverError',
    'DeformedCompletion',
    'DualisingComplex',
    'GinzburgAlgebra',
    'Quiver',
    'QuiverAction',
    'SigmaStarSmash',
    'TruncatedTensorAlgebra',
    'completed_path_counts',
    'completion_smash_iso',
    'cy_completion',
    'deformed_cocycle_check',
    'deformed_completion',
    'dualising_from_ext',
    'hereditary_inverse_dualising',
    'path_algebra',
    'path_bound',
    'sigma_star_smash',
    'validate_config',
    'vertex_contraction',
]
