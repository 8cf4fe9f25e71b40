"""Nakayama automorphisms read off free generators, and the classification of algebras."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Union

from ..core.algebra import AlgebraMorphism, FinDimAlgebra
from ..core.linalg import LinearMap, Vec, find_invertible_combination
from ..core.modules import Bimodule, LeftModule
from ..core.report import CheckReport
from ..equivariant.bimodule import EquivariantBimodule
from ..equivariant.invertibility import check_invertible_bimodule
from ..hopf.inner import inner_witness
from . import config
from .exceptions import HomologyError, NotFreeGeneratorError, PreconditionError
from .ext import ExtLadder, bimodule_ext
from .resolution import SmoothnessVerdict, smoothness_probe

logger = logging.getLogger(__name__)

Rung = Union[Bimodule, EquivariantBimodule]

CY = "CY"
SKEW_CY = "skewCY"
VDB = "VdB"
NONE = "none"
UNDETERMINED = "undetermined"


def _bimodule(rung: Rung) -> Bimodule:
    return rung.bimodule if isinstance(rung, EquivariantBimodule) else rung


def generator_map(rung: Rung, e: Vec) -> LinearMap:
    """a -> a·e from A to the rung."""
    B = _bimodule(rung)
    A = B.left_algebra
    return LinearMap(B.field, A.dim, B.dim, [B.act_left(A.e(a), e) for a in range(A.dim)])


def is_free_generator(rung: Rung, e: Vec) -> bool:
    B = _bimodule(rung)
    return B.dim == B.left_algebra.dim and generator_map(rung, e).is_bijective()


def find_free_generator(rung: Rung) -> Optional[Vec]:
    """A free generator e of the rung, or None when none exists.

    a -> a·e is linear in e, so e = Σ c_k b_k generates freely exactly when
    Σ c_k (a -> a·b_k) is invertible.
    """
    B = _bimodule(rung)
    if B.dim != B.left_algebra.dim:
        return None
    one = B.field.one
    coeffs = find_invertible_combination([generator_map(rung, {k: one}) for k in range(B.dim)])
    if coeffs is None:
        return None
    return {k: c for k, c in enumerate(coeffs) if c}


@dataclass
class NakayamaData:
    """μ with e·a = μ(a)·e for a free generator e of a rung.

    Attributes:
        degree: the Ext degree of the rung
        generator: e
        mu: the automorphism
        certificate: the bijection a -> a·e
        report: the identity e·a = μ(a)·e and the automorphism checks
    """
    degree: int
    generator: Vec
    mu: AlgebraMorphism
    certificate: LinearMap
    report: CheckReport

    def to_dict(self) -> Dict[str, Any]:
        B = self.mu.source
        return {
            "degree": self.degree,
            "generator": {str(k): B.field.format(c) for k, c in sorted(self.generator.items())},
            "mu": self.mu.to_dict(),
            "passed": self.report.passed,
        }


def nakayama_from_generator(rung: Rung, e: Vec, degree: int = 0) -> NakayamaData:
    """Solve e·a = μ(a)·e for μ.

    Raises:
        NotFreeGeneratorError: a -> a·e is not bijective
    """
    B = _bimodule(rung)
    A = B.left_algebra
    L = generator_map(rung, e)
    if B.dim != A.dim or not L.is_bijective():
        raise NotFreeGeneratorError(f"{e} does not freely generate {B.name} as a left {A.name}-module")
    L_inv = L.inverse()
    mu = AlgebraMorphism(A, A, [L_inv(B.act_right(e, A.e(a))) for a in range(A.dim)], name=f"μ[{A.name}]")
    report = CheckReport(f"Nakayama automorphism of {A.name} from {B.name}")
    report.sweep("e·a = μ(a)·e", ((a,) for a in range(A.dim)),
                 lambda a: B.act_right(e, A.e(a)) == B.act_left(mu.cols[a], e))
    report.extend(mu.check(), prefix="μ ")
    report.record("μ bijective", mu.is_bijective())
    logger.debug(f"{A.name}: Nakayama automorphism {mu.to_dict()['images']}")
    return NakayamaData(degree=degree, generator=dict(e), mu=mu, certificate=L, report=report)


def ladder_nakayama(ladder: ExtLadder) -> NakayamaData:
    """Nakayama data of the only nonzero rung of a ladder.

    Raises:
        PreconditionError: the ladder is not concentrated in one degree
        NotFreeGeneratorError: the top rung has no free generator
    """
    d = ladder.concentrated()
    if d is None:
        raise PreconditionError(f"Ext of {ladder.algebra.name} is not concentrated (dims {ladder.dims})")
    rung = ladder.rungs[d]
    e = find_free_generator(rung)
    if e is None:
        raise NotFreeGeneratorError(f"Ext^{d} of {ladder.algebra.name} has no free generator")
    return nakayama_from_generator(rung, e, degree=d)


def dual_module(A: FinDimAlgebra) -> LeftModule:
    """DA = Hom_k(A, k) with (a·f)(x) = f(xa)."""
    return LeftModule(A, A.dim, [op.transpose() for op in A.right_regular()], name=f"D({A.name})")


def is_frobenius(A: FinDimAlgebra) -> bool:
    """A ≅ DA as left A-modules."""
    return LeftModule.regular(A).is_isomorphic(dual_module(A))


@dataclass
class AlgebraClassification:
    """Where a finite-dimensional algebra sits among CY, skew-CY and Van den Bergh algebras.

    A non-smooth Frobenius algebra still carries the Nakayama automorphism
    of its free rank-one Ext^0, with the verdict none.
    """
    algebra: FinDimAlgebra
    verdict: str
    smoothness: SmoothnessVerdict
    degree: Optional[int] = None
    ladder: Optional[ExtLadder] = None
    nakayama: Optional[NakayamaData] = None
    frobenius: Optional[bool] = None
    inner: Optional[Vec] = None
    report: CheckReport = field(default_factory=lambda: CheckReport("classification"))

    @property
    def has_nakayama(self) -> bool:
        return self.nakayama is not None

    def label(self) -> str:
        if self.verdict in (CY, VDB, SKEW_CY):
            return f"{self.verdict}({self.degree})"
        if self.verdict == NONE and self.smoothness.kind == SmoothnessVerdict.PERIODIC:
            return "none (NotSmoothPeriodic)"
        return self.verdict

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "algebra": self.algebra.name,
            "verdict": self.label(),
            "smoothness": self.smoothness.to_dict(),
            "degree": self.degree,
            "frobenius": self.frobenius,
            "report": self.report.to_dict(),
        }
        if self.ladder is not None:
            data["ext"] = self.ladder.to_dict()
        if self.nakayama is not None:
            data["nakayama"] = self.nakayama.to_dict()
        if self.inner is not None:
            data["inner_witness"] = self.algebra.format(self.inner)
        return data


def classify_algebra(A: FinDimAlgebra, bound: Optional[int] = None) -> AlgebraClassification:
    """Classify A by its smoothness probe and the ladder Ext^*_{A^e}(A, A^e).

    Smooth A: the ladder is computed through the resolution length; a
    single invertible rung gives VdB, a free rank-one rung gives skew-CY,
    an inner Nakayama automorphism gives CY. Non-smooth A gives none, with
    the Frobenius case still carrying its Nakayama automorphism from Ext^0.
    """
    bound = config.RESOLUTION_BOUND if bound is None else bound
    logger.info(f"Classifying {A.name} with resolution bound {bound}")
    try:
        smoothness = smoothness_probe(A, bound)
    except HomologyError as e:
        logger.warning(f"Smoothness probe of {A.name} failed: {e}")
        smoothness = SmoothnessVerdict(SmoothnessVerdict.UNDETERMINED, bound=bound)
    result = AlgebraClassification(algebra=A, verdict=UNDETERMINED, smoothness=smoothness,
                                   report=CheckReport(f"classification of {A.name}"))
    if smoothness.kind == SmoothnessVerdict.UNDETERMINED:
        return result

    if smoothness.smooth:
        ladder = bimodule_ext(A, smoothness.length)
    else:
        result.frobenius = is_frobenius(A)
        ladder = bimodule_ext(A, 0)
    result.ladder = ladder
    result.report.record("ladder rungs equivariant", ladder.passed)
    if ladder.truncated:
        logger.warning(f"{A.name}: Ext ladder stopped at degree {ladder.reliable_through}")
        return result
    result.verdict = NONE
    if not smoothness.smooth:
        if result.frobenius:
            e = find_free_generator(ladder.rungs[0])
            if e is not None:
                result.nakayama = nakayama_from_generator(ladder.rungs[0], e, degree=0)
                result.report.extend(result.nakayama.report, prefix="frobenius nakayama ")
        return result

    result.degree = ladder.concentrated()
    if result.degree is None:
        return result
    rung = ladder.rungs[result.degree]
    e = find_free_generator(rung)
    if e is None:
        result.verdict = VDB if check_invertible_bimodule(rung).invertible else NONE
        return result
    result.nakayama = nakayama_from_generator(rung, e, degree=result.degree)
    result.report.extend(result.nakayama.report, prefix="nakayama ")
    result.inner = inner_witness(A, result.nakayama.mu)
    result.verdict = CY if result.inner is not None else SKEW_CY
    logger.info(f"{A.name}: {result.label()}")
    return result
