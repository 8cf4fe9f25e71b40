"""Hopf algebras, characters, winding automorphisms and inner witnesses."""

from .characters import (
    Character,
    check_sigma_condition,
    sigma_condition_report,
    winding_left,
    winding_right,
)
from .config import validate_config
from .exceptions import AntipodeError, CharacterError, HopfError
from .hopf import HopfAlgebra, antipode_power, sweedler, verify_hopf
from .inner import conjugation, inner_witness, intertwiner_space, is_inner_by
from .library import (
    cyclic_group_algebra,
    dual_cyclic_group_algebra,
    group_algebra,
    matrix_group,
    matrix_group_algebra,
    sweedler_algebra,
    trivial_hopf,
)


__all__ = [
    'AntipodeError',
    'Character',
    'CharacterError',
    'HopfAlgebra',
    'HopfError',
    'antipode_power',
    'check_sigma_condition',
    'conjugation',
    'cyclic_group_algebra',
    'dual_cyclic_group_algebra',
    'group_algebra',
    'inner_witness',
    'intertwiner_space',
    'is_inner_by',
    'matrix_group',
    'matrix_group_algebra',
    'sigma_condition_report',
    'sweedler',
    'sweedler_algebra',
    'trivial_hopf',
    'validate_config',
    'verify_hopf',
    'winding_left',
    'winding_right',
]
