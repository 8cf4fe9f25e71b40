"""smashcalc: exact computations with Hopf smash products, Calabi-Yau conditions and CY completions."""

__version__ = "0.1.0"

from .core import CheckReport, Field, FinDimAlgebra, LinearMap, SmashcalcError
from .hopf import HopfAlgebra
from .smash import ModuleAlgebraAction, smash_product
from .tasks import Workspace, get_task_registry, run_tasks


__all__ = [
    'CheckReport',
    'Field',
    'FinDimAlgebra',
    'HopfAlgebra',
    'LinearMap',
    'ModuleAlgebraAction',
    'SmashcalcError',
    'Workspace',
    'get_task_registry',
    'run_tasks',
    'smash_product',
]
