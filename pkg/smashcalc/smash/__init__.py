"""Module-algebra actions, smash products, the Δ_i algebras and their identities."""

from .action import ModuleAlgebraAction, check_module_algebra
from .config import validate_config
from .delta import DeltaAlgebra, DeltaEmbedding, delta_algebra, delta_embedding
from .exceptions import ActionError, SmashError
from .identities import (
    IdentityContext,
    base_as_delta_module,
    base_as_smash_module,
    enveloping_smash_morphism,
    twist_automorphism,
    verify_identities,
)
from .smash import SmashAlgebra, smash_product


__all__ = [
    'ActionError',
    'DeltaAlgebra',
    'DeltaEmbedding',
    'IdentityContext',
    'ModuleAlgebraAction',
    'SmashAlgebra',
    'SmashError',
    'base_as_delta_module',
    'base_as_smash_module',
    'check_module_algebra',
    'delta_algebra',
    'delta_embedding',
    'enveloping_smash_morphism',
    'smash_product',
    'twist_automorphism',
    'validate_config',
    'verify_identities',
]
