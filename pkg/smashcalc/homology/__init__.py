"""Resolutions, Ext, Nakayama automorphisms, integrals and homological determinants."""

from .artin_schelter import (
    ArtinSchelterData,
    ArtinSchelterReport,
    SpectralDimensionReport,
    as_smash_check,
    artin_schelter,
    ss_dimension_consistency,
)
from .config import validate_config
from .exceptions import (
    ArtinSchelterError,
    HomologyError,
    NotFreeGeneratorError,
    PreconditionError,
    ResolutionTruncatedError,
)
from .ext import ExtGroups, ExtLadder, bimodule_ext, ext_bimodule, ext_one_sided, smash_module_ext
from .hdet import WeakHdet, epsilon_hdet_witness, rescaled_whdet, theta_whdet, weak_hdet
from .integrals import HomologicalIntegral, HopfClassification, classify_hopf, homological_integral, hopf_nakayama
from .nakayama import (
    AlgebraClassification,
    NakayamaData,
    classify_algebra,
    find_free_generator,
    is_frobenius,
    nakayama_from_generator,
)
from .radical import RadicalData, radical_data
from .resolution import (
    Resolution,
    SmoothnessVerdict,
    bar_resolution,
    bimodule_resolution,
    minimal_resolution,
    smoothness_probe,
    trivial_module,
)
from .theorems import (
    CySmashVerdict,
    NakayamaSmashRecord,
    SkewGroupVerdict,
    cy_smash_check,
    nakayama_smash,
    skew_group_cy,
)


__all__ = [
    'AlgebraClassification',
    'ArtinSchelterData',
    'ArtinSchelterError',
    'ArtinSchelterReport',
    'CySmashVerdict',
    'ExtGroups',
    'ExtLadder',
    'HomologicalIntegral',
    'HomologyError',
    'HopfClassification',
    'NakayamaData',
    'NakayamaSmashRecord',
    'NotFreeGeneratorError',
    'PreconditionError',
    'RadicalData',
    'Resolution',
    'ResolutionTruncatedError',
    'SkewGroupVerdict',
    'SmoothnessVerdict',
    'SpectralDimensionReport',
    'WeakHdet',
    'artin_schelter',
    'as_smash_check',
    'bar_resolution',
    'bimodule_ext',
    'bimodule_resolution',
    'classify_algebra',
    'classify_hopf',
    'cy_smash_check',
    'epsilon_hdet_witness',
    'ext_bimodule',
    'ext_one_sided',
    'find_free_generator',
    'homological_integral',
    'hopf_nakayama',
    'is_frobenius',
    'minimal_resolution',
    'nakayama_from_generator',
    'nakayama_smash',
    'radical_data',
    'rescaled_whdet',
    'skew_group_cy',
    'smash_module_ext',
    'smoothness_probe',
    'ss_dimension_consistency',
    'theta_whdet',
    'trivial_module',
    'validate_config',
    'weak_hdet',
]
