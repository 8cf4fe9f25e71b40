"""Equivariant bimodules, their smash bimodules, duals, tensor products and invertibility."""

from .bimodule import EquivariantBimodule, check_equivariant
from .duals import LEFT, RIGHT, DualBimodule, EquivariantDual, double_dual_evaluation, equivariant_dual
from .exceptions import EquivariantError, IndexMismatchError, SigmaConditionError
from .invertibility import (
    InvertibilityVerdict,
    TransferVerdict,
    check_invertible_bimodule,
    invertibility_transfer,
)
from .smash_bimodule import (
    FlipResult,
    SmashBimodule,
    SmashTensorIso,
    flip_smash,
    require_commutes_with_square,
    smash_bimodule,
    tensor_smash_iso,
)
from .tensor import BalancedTensor, EquivariantTensor, associator, tensor_equivariant, tensor_h_action


__all__ = [
    'BalancedTensor',
    'DualBimodule',
    'EquivariantBimodule',
    'EquivariantDual',
    'EquivariantError',
    'EquivariantTensor',
    'FlipResult',
    'IndexMismatchError',
    'InvertibilityVerdict',
    'LEFT',
    'RIGHT',
    'SigmaConditionError',
    'SmashBimodule',
    'SmashTensorIso',
    'TransferVerdict',
    'associator',
    'check_equivariant',
    'check_invertible_bimodule',
    'double_dual_evaluation',
    'equivariant_dual',
    'flip_smash',
    'invertibility_transfer',
    'require_commutes_with_square',
    'smash_bimodule',
    'tensor_equivariant',
    'tensor_h_action',
    'tensor_smash_iso',
]
