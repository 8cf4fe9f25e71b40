"""Koszul resolutions, top Ext and homological determinants of polynomial module algebras."""

from .config import validate_config
from .exceptions import KoszulError
from .graded import graded_cy_smash
from .polynomial import PolynomialModuleAlgebra, monomials
from .resolution import KoszulResolutionData, koszul_resolution
from .top_ext import PolynomialTopExt, determinant, poly_top_ext


__all__ = [
    'KoszulError',
    'KoszulResolutionData',
    'PolynomialModuleAlgebra',
    'PolynomialTopExt',
    'determinant',
    'graded_cy_smash',
    'koszul_resolution',
    'monomials',
    'poly_top_ext',
    'validate_config',
]
