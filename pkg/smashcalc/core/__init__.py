"""Exact fields, sparse linear algebra, algebras and modules."""

from .algebra import AlgebraMorphism, FinDimAlgebra, format_element, split_tensor, tensor_vectors
from .exceptions import (
    AlgebraStructureError,
    FieldError,
    FieldMismatchError,
    NotInvertibleError,
    ShapeMismatchError,
    SmashcalcError,
    TruncationError,
)
from .field import RATIONALS, Field
from .linalg import (
    LinearMap,
    SparseTensor,
    Subquotient,
    Subspace,
    Vec,
    find_invertible_combination,
    nullspace,
    rank,
    solve_linear,
)
from .modules import Bimodule, LeftModule, hom_space
from .report import AxiomCheck, CheckReport

__all__ = [
    'AlgebraMorphism',
    'AlgebraStructureError',
    'AxiomCheck',
    'Bimodule',
    'CheckReport',
    'Field',
    'FieldError',
    'FieldMismatchError',
    'FinDimAlgebra',
    'LeftModule',
    'LinearMap',
    'NotInvertibleError',
    'RATIONALS',
    'ShapeMismatchError',
    'SmashcalcError',
    'SparseTensor',
    'Subquotient',
    'Subspace',
    'TruncationError',
    'Vec',
    'find_invertible_combination',
    'format_element',
    'hom_space',
    'nullspace',
    'rank',
    'solve_linear',
    'split_tensor',
    'tensor_vectors',
]
